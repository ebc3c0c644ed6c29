#include "fcancel/matrix.hpp"

#include <sstream>

namespace fcancel {

MatQ MatQ::identity(std::size_t n) {
  MatQ out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

MatQ MatQ::diag(const VecQ& d) {
  MatQ out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

MatQ MatQ::from_rows(const std::vector<VecQ>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatQ out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

MatQ MatQ::from_columns(const std::vector<VecQ>& cols, std::size_t rows) {
  MatQ out(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(Errc::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = cols[j][i];
  }
  return out;
}

std::size_t MatQ::size() const {
  if (!is_square()) throw Error(Errc::DimensionMismatch, "matrix is not square");
  return rows_;
}

VecQ MatQ::column(std::size_t j) const {
  VecQ out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

VecQ MatQ::row(std::size_t i) const { return VecQ(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

MatQ MatQ::transpose() const {
  MatQ out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Rat MatQ::trace() const {
  Rat acc = 0;
  for (std::size_t i = 0; i < size(); ++i) acc += (*this)(i, i);
  return acc;
}

bool MatQ::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

bool MatQ::is_integral() const {
  for (const Rat& x : a_)
    if (x.get_den() != 1) return false;
  return true;
}

MatQ& MatQ::operator+=(const MatQ& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::DimensionMismatch, "matrix sum shape");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

MatQ& MatQ::operator-=(const MatQ& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::DimensionMismatch, "matrix difference shape");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

MatQ& MatQ::operator*=(const Rat& s) {
  for (Rat& x : a_) x *= s;
  return *this;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape");
  MatQ out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Rat& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(l, j);
    }
  }
  return out;
}

VecQ operator*(const MatQ& a, const VecQ& v) {
  if (a.cols() != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector shape");
  VecQ out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

MatQ shift(const MatQ& a, const Rat& c) {
  MatQ out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out(i, i) -= c;
  return out;
}

MatQ pow(const MatQ& a, unsigned e) {
  MatQ out = MatQ::identity(a.size());
  for (unsigned i = 0; i < e; ++i) out = out * a;
  return out;
}

MatQ rref(const MatQ& a, std::vector<std::size_t>* pivots) {
  MatQ m = a;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rat inv = Rat(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return m;
}

std::size_t rank(const MatQ& a) {
  std::vector<std::size_t> pivots;
  rref(a, &pivots);
  return pivots.size();
}

std::vector<VecQ> kernel(const MatQ& a) {
  std::vector<std::size_t> pivots;
  const MatQ r = rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<VecQ> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    VecQ v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

MatQ inverse(const MatQ& a) {
  const std::size_t n = a.size();
  MatQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  const MatQ r = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(Errc::SingularMatrix, "matrix is singular");
  MatQ out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  return out;
}

Nat entry_denominator(const MatQ& a) { return common_denominator(a.data()); }

bool commutes(const MatQ& a, const MatQ& b) { return a * b == b * a; }

std::string to_string(const MatQ& a) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? ", " : "") << to_string(a(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace fcancel
