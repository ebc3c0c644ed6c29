#pragma once

// Dense rational matrices (row-major) with exact elimination.

#include <vector>

#include "fcancel/arith.hpp"

namespace fcancel {

using VecQ = std::vector<Rat>;

class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  explicit MatQ(std::size_t n) : MatQ(n, n) {}

  static MatQ identity(std::size_t n);
  static MatQ diag(const VecQ& d);
  static MatQ from_rows(const std::vector<VecQ>& rows);
  static MatQ from_columns(const std::vector<VecQ>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length of a square matrix.
  std::size_t size() const;

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Rat>& data() const { return a_; }

  VecQ column(std::size_t j) const;
  VecQ row(std::size_t i) const;
  MatQ transpose() const;
  Rat trace() const;
  bool is_zero() const;
  bool is_integral() const;

  MatQ& operator+=(const MatQ& rhs);
  MatQ& operator-=(const MatQ& rhs);
  MatQ& operator*=(const Rat& s);
  friend MatQ operator+(MatQ a, const MatQ& b) { return a += b; }
  friend MatQ operator-(MatQ a, const MatQ& b) { return a -= b; }
  friend MatQ operator*(const MatQ& a, const MatQ& b);
  friend MatQ operator*(MatQ a, const Rat& s) { return a *= s; }
  friend MatQ operator*(const Rat& s, MatQ a) { return a *= s; }
  MatQ operator-() const { return *this * Rat(-1); }

  friend bool operator==(const MatQ& a, const MatQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

VecQ operator*(const MatQ& a, const VecQ& v);

/// A - c E
MatQ shift(const MatQ& a, const Rat& c);
MatQ pow(const MatQ& a, unsigned e);

/// Reduced row echelon form; pivot columns are appended to `pivots` if given.
MatQ rref(const MatQ& a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const MatQ& a);
/// Basis of the right null space, one vector per free column (free entry 1).
std::vector<VecQ> kernel(const MatQ& a);
/// Throws SingularMatrix when a is not invertible.
MatQ inverse(const MatQ& a);

/// lcm of entry denominators.
Nat entry_denominator(const MatQ& a);
bool commutes(const MatQ& a, const MatQ& b);

std::string to_string(const MatQ& a);

}  // namespace fcancel
