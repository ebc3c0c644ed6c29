#pragma once

// Characteristic/minimal polynomials, rational Jordan data, matrix binomials
// Delta_n(A) and the noncommutative bracket <A_1, ..., A_s>_n.

#include <map>
#include <utility>
#include <vector>

#include "fcancel/certificate.hpp"
#include "fcancel/matrix.hpp"
#include "fcancel/poly.hpp"

namespace fcancel {

/// det(xE - A), monic (Faddeev-LeVerrier).
UniPoly char_poly(const MatQ& a);
/// Monic minimal polynomial: first linear dependency among E, A, A^2, ...
UniPoly min_poly(const MatQ& a);

struct Root {
  Rat value;
  unsigned multiplicity;
};
/// Rational roots in ascending order with multiplicities.
std::vector<Root> rational_roots(const UniPoly& f);

struct JordanBlock {
  Rat eigenvalue;
  unsigned size;
};

struct SpectralData {
  std::vector<Rat> eigenvalues;
  std::vector<unsigned> minpoly_mults;
  unsigned r_max = 0;
  UniPoly char_poly;
  UniPoly min_poly;
  /// Blocks in the column order of jordan_T.
  std::vector<JordanBlock> blocks;
  MatQ jordan_T;
  MatQ jordan_T_inv;
  Nat t1 = 1;
  Nat t2 = 1;
  Nat b = 1;
};

/// Throws IrrationalSpectrum unless every eigenvalue is rational.
SpectralData spectral(const MatQ& a);
MatQ jordan_matrix(const std::vector<JordanBlock>& blocks);

/// <A>_n = A (A - E) ... (A - (n-1) E)
MatQ matrix_falling(const MatQ& a, unsigned long n);
MatQ matrix_delta(const MatQ& a, unsigned long n);
/// Delta_0(A), ..., Delta_k(A).
std::vector<MatQ> matrix_delta_range(const MatQ& a, unsigned long k);
MatQ jordan_block_delta(const Rat& lambda, unsigned size, unsigned long n);
/// Delta_n(T A T^{-1}) == T Delta_n(A) T^{-1}; throws SingularMatrix.
bool conjugation_check(const MatQ& a, const MatQ& t, unsigned long n);

Nat matrix_bound(const SpectralData& sd, unsigned long k);
CancellationCertificate certify_matrix(const MatQ& a, unsigned long k, unsigned digits = kDefaultDigits);
std::vector<CancellationCertificate> certify_matrix_upto(const MatQ& a, unsigned long k_max,
                                                         unsigned digits = kDefaultDigits);

using BracketKey = std::vector<unsigned>;

/// Memo table for one family of matrices.
class BracketTable {
 public:
  explicit BracketTable(std::vector<MatQ> mats);
  const MatQ& get(const BracketKey& n);
  const std::vector<MatQ>& mats() const { return mats_; }

 private:
  std::vector<MatQ> mats_;
  std::size_t dim_;
  std::map<BracketKey, MatQ> memo_;
};

MatQ bracket(const std::vector<MatQ>& mats, const BracketKey& n);
/// Plain recursion, for checking the memo table.
MatQ bracket_unmemoized(const std::vector<MatQ>& mats, const BracketKey& n);
/// All n in Z_+^s with |n| = k, lexicographically descending.
std::vector<BracketKey> compositions(unsigned k, std::size_t s);
bool bracket_sum_identity(const std::vector<MatQ>& mats, unsigned k);
/// Throws NotCommuting.
bool bracket_commuting_identity(const std::vector<MatQ>& mats, const BracketKey& n);

}  // namespace fcancel
