#pragma once

// Truncated power series f_0 + f_1 z + ... + f_N z^N over Q.

#include <vector>

#include "fcancel/arith.hpp"

namespace fcancel {

class SeriesQ {
 public:
  explicit SeriesQ(unsigned order = 0) : c_(order + 1) {}
  SeriesQ(unsigned order, std::vector<Rat> coeffs);

  unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& operator[](std::size_t n) const { return c_.at(n); }
  Rat& operator[](std::size_t n) { return c_.at(n); }

  SeriesQ truncate(unsigned order) const;
  /// Multiply by z (the top coefficient falls off).
  SeriesQ shift_up() const;
  /// d/dz, truncated one order lower.
  SeriesQ derivative() const;

  friend bool operator==(const SeriesQ& a, const SeriesQ& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rat> c_;
};

/// Results are truncated at the smaller of the two orders.
SeriesQ operator+(const SeriesQ& a, const SeriesQ& b);
SeriesQ operator-(const SeriesQ& a, const SeriesQ& b);
SeriesQ operator*(const SeriesQ& a, const SeriesQ& b);
SeriesQ operator*(const Rat& s, const SeriesQ& a);
/// Throws DivideByZeroSeries when b_0 = 0.
SeriesQ divide(const SeriesQ& a, const SeriesQ& b);

/// z d/dz: coefficient n is multiplied by n.
SeriesQ delta_series(const SeriesQ& f);

}  // namespace fcancel
