#pragma once

// Sparse polynomials over Q in y_1..y_m.

#include <map>
#include <vector>

#include "fcancel/arith.hpp"

namespace fcancel {

using Exponent = std::vector<unsigned>;

class MultiPoly {
 public:
  explicit MultiPoly(unsigned vars = 0) : vars_(vars) {}

  static MultiPoly constant(unsigned vars, const Rat& c);
  static MultiPoly monomial(const Rat& c, Exponent e);
  /// y_i (0-based index).
  static MultiPoly variable(unsigned vars, unsigned i);

  unsigned vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  unsigned total_degree() const;

  void add_term(const Exponent& e, const Rat& c);
  /// d/dy_i
  MultiPoly partial(unsigned i) const;
  /// (1/j!) d^j/dy_i^j
  MultiPoly partial_scaled(unsigned i, unsigned j) const;
  bool is_integral() const;
  Nat coefficient_denominator() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rat& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& s) { return a *= s; }
  friend MultiPoly operator*(const Rat& s, MultiPoly a) { return a *= s; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return a.terms_ < b.terms_; }

 private:
  unsigned vars_;
  std::map<Exponent, Rat> terms_;
};

MultiPoly pow(const MultiPoly& f, unsigned e);

/// All exponent vectors in `vars` variables with total degree exactly d.
std::vector<Exponent> exponents_of_degree(unsigned vars, unsigned d);

std::string to_string(const MultiPoly& f);

}  // namespace fcancel
