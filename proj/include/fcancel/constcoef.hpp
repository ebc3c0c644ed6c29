#pragma once

// Derivations [A] = sum A_lj y_j d/dy_l on Q[y_1..y_m], their formal
// products and compositions, the operators A_n = ([A]-n+1)...[A], the
// partition expansion of A_n / n!, and the constant-coefficient certificate.

#include <map>
#include <vector>

#include "fcancel/certificate.hpp"
#include "fcancel/matrix.hpp"
#include "fcancel/multipoly.hpp"

namespace fcancel {

/// sum_d c_d(y) d^{|d|}/dy^d, keyed by the derivative multi-index d.
class LinearDiffOp {
 public:
  explicit LinearDiffOp(unsigned vars = 0) : vars_(vars) {}

  static LinearDiffOp identity(unsigned vars);
  static LinearDiffOp scalar(unsigned vars, const Rat& c);

  unsigned vars() const { return vars_; }
  const std::map<Exponent, MultiPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest |d| over the terms.
  unsigned order() const;

  void add_term(const Exponent& d, const MultiPoly& c);
  MultiPoly apply(const MultiPoly& f) const;

  LinearDiffOp& operator+=(const LinearDiffOp& rhs);
  LinearDiffOp& operator-=(const LinearDiffOp& rhs);
  LinearDiffOp& operator*=(const Rat& s);
  friend LinearDiffOp operator+(LinearDiffOp a, const LinearDiffOp& b) { return a += b; }
  friend LinearDiffOp operator-(LinearDiffOp a, const LinearDiffOp& b) { return a -= b; }
  friend LinearDiffOp operator*(LinearDiffOp a, const Rat& s) { return a *= s; }
  friend LinearDiffOp operator*(const Rat& s, LinearDiffOp a) { return a *= s; }
  friend bool operator==(const LinearDiffOp& a, const LinearDiffOp& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  unsigned vars_;
  std::map<Exponent, MultiPoly> terms_;
};

LinearDiffOp bracket_op(const MatQ& a);
/// Symbol product: coefficients multiply, derivative indices add.
LinearDiffOp formal_product(const LinearDiffOp& a, const LinearDiffOp& b);
LinearDiffOp formal_product(const std::vector<LinearDiffOp>& ops, unsigned vars);
LinearDiffOp formal_power(const LinearDiffOp& a, unsigned e);
/// outer o inner, with the Leibniz rule on inner's coefficients.
LinearDiffOp compose(const LinearDiffOp& outer, const LinearDiffOp& inner);

/// ([A]-n+1) o ... o ([A]-1) o [A]; reversed = true composes the factors in the opposite order.
LinearDiffOp script_A_n(const MatQ& a, unsigned n, bool reversed = false);

/// All (s_1..s_n) with s_1 + 2 s_2 + ... + n s_n = n.
std::vector<std::vector<unsigned>> partitions(unsigned n);

struct ProductLimits {
  unsigned max_vars = 4;
  unsigned max_factors = 8;
};
/// sum over partitions of prod_i (1/s_i!) [Delta_i(A)]^{s_i}; throws LimitExceeded past the limits.
LinearDiffOp lemma17_rhs(const MatQ& a, unsigned n, const ProductLimits& limits = {});

/// Both operators agree on every monomial of degree <= degree_cap.
bool same_action(const LinearDiffOp& a, const LinearDiffOp& b, unsigned degree_cap);

/// (1/s!)[B]^s maps every monomial of degree <= degree_cap into Z[y]. B must be integral.
bool monomial_integrality_check(const MatQ& b, unsigned s, unsigned degree_cap);

/// s_1 tau_p(1) + ... + s_n tau_p(n) <= tau_p(s_1 + 2 s_2 + ... + n s_n). Throws NotPrime.
bool lemma19_inequality(const std::vector<unsigned>& s, const Nat& p);

/// Throws IrrationalSpectrum, RepeatedRootMinPoly.
CancellationCertificate certify_constcoef(const MatQ& a, unsigned long k, unsigned degree_cap = 6,
                                          unsigned digits = kDefaultDigits);

std::string to_string(const LinearDiffOp& op);

}  // namespace fcancel
