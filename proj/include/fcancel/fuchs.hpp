#pragma once

// Fuchsian systems y' = Q(z) y with Q = sum_i A_i / (z - gamma_i): the
// derivative matrices Q^[n], their bracket expansion, and certificates.

#include <optional>
#include <vector>

#include "fcancel/certificate.hpp"
#include "fcancel/matfun.hpp"
#include "fcancel/poly.hpp"

namespace fcancel {

struct FuchsianSystem {
  unsigned m = 0;
  std::vector<Rat> gammas;
  /// (m+1)x(m+1) when augmented (first row zero), m x m otherwise.
  std::vector<MatQ> residues;
  bool augmented = false;
  /// prod_i (z - gamma_i)
  UniPoly T_poly;

  /// Validates shapes and distinct poles, and builds T_poly.
  static FuchsianSystem make(unsigned m, std::vector<Rat> gammas, std::vector<MatQ> residues, bool augmented);
  std::size_t dim() const { return augmented ? m + 1 : m; }
};

class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static PolyMat identity(std::size_t n);
  static PolyMat from(const MatQ& a);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  UniPoly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const UniPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  PolyMat transpose() const;
  PolyMat derivative() const;
  /// lcm of all coefficient denominators.
  Nat coefficient_denominator() const;

  PolyMat& operator+=(const PolyMat& rhs);
  friend PolyMat operator+(PolyMat a, const PolyMat& b) { return a += b; }
  friend PolyMat operator-(const PolyMat& a, const PolyMat& b);
  friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
  friend PolyMat operator*(const UniPoly& p, const PolyMat& a);
  friend PolyMat operator*(const Rat& s, const PolyMat& a);
  friend bool operator==(const PolyMat& a, const PolyMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<UniPoly> a_;
};

using RatFunMat = std::vector<std::vector<RatFun>>;

RatFunMat q_matrix(const FuchsianSystem& sys);
/// T(z) Q(z) as a polynomial matrix.
PolyMat tq_matrix(const FuchsianSystem& sys);

/// T^n Q^[n] via the cleared-denominator recurrence.
PolyMat qn_recurrence(const FuchsianSystem& sys, unsigned n);
/// T^0 Q^[0], ..., T^k Q^[k].
std::vector<PolyMat> qn_recurrence_range(const FuchsianSystem& sys, unsigned k);
/// Q^[n] itself, by the rational-function recurrence.
RatFunMat qn_rational(const FuchsianSystem& sys, unsigned n);
/// transpose of sum_{|n|=n} <tA_1..tA_s>_n prod_i (z - gamma_i)^{n - n_i}
PolyMat qn_via_brackets(const FuchsianSystem& sys, unsigned n);
/// (d/dz + tQ)^n E by direct application on rational functions.
RatFunMat operator_power_identity(const FuchsianSystem& sys, unsigned n);

bool commuting_check(const std::vector<MatQ>& mats);

/// Bound for pairwise commuting residues with rational spectra.
struct CommutingBoundData {
  Nat t_product = 1;
  Nat q = 1;
  Nat b = 1;
  unsigned r_sum = 0;
  unsigned r_max = 1;
};
/// Empty when residues do not commute or a spectrum is irrational.
std::optional<CommutingBoundData> commuting_bound_data(const FuchsianSystem& sys);
Nat commuting_bound(const CommutingBoundData& data, unsigned long k);

CancellationCertificate certify_system(const FuchsianSystem& sys, unsigned long k, unsigned digits = kDefaultDigits);
/// Certificates for k = 1..k_max from one pass of the recurrence.
std::vector<CancellationCertificate> certify_system_upto(const FuchsianSystem& sys, unsigned long k_max,
                                                         unsigned digits = kDefaultDigits);

/// T^n D^n / n! applied to z^d E for d <= degree_cap, n <= k, with
/// D = d/dz + tQ; returns the lcm of all coefficient denominators.
Nat operator_psi(const FuchsianSystem& sys, unsigned long k, unsigned degree_cap);

/// Product-form expansion of T^n D^n / n! for commuting residues, compared on
/// z^d E, d <= degree_cap. Throws NotCommuting.
bool operator_identity_24(const FuchsianSystem& sys, unsigned n, unsigned degree_cap);

/// D^n f for D = d/dz + lambda/z, against sum_l C(n,l) <lambda>_l z^{-l} f^{(n-l)}.
bool scalar_identity_14(const Rat& lambda, unsigned n, const UniPoly& f);
/// D^n f for D = d/dz + sum_i lambda_i/(z - gamma_i), against the multinomial expansion.
bool scalar_identity_16(const std::vector<Rat>& lambdas, const std::vector<Rat>& gammas, unsigned n,
                        const UniPoly& f);

}  // namespace fcancel
