#pragma once

// Dense univariate polynomials over Q and reduced rational functions.

#include <utility>
#include <vector>

#include "fcancel/arith.hpp"

namespace fcancel {

class UniPoly {
 public:
  UniPoly() = default;
  /// Coefficients lowest degree first; trailing zeros are stripped.
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, unsigned degree);
  /// z - root
  static UniPoly linear(const Rat& root);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const Rat& leading() const;

  Rat eval(const Rat& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const Rat& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rat& s) { return a *= s; }
  friend UniPoly operator*(const Rat& s, UniPoly a) { return a *= s; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

UniPoly pow(const UniPoly& f, unsigned e);

/// (1/n!) d^n f / dz^n, computed coefficientwise as C(d, n) z^{d-n}.
UniPoly differentiate_scaled(const UniPoly& f, unsigned long n);

/// lcm of coefficient denominators; 1 for the zero polynomial.
Nat integer_content_denominator(const UniPoly& f);

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero if both are zero). Primitive remainder sequence over Z.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// f(z + c).
UniPoly taylor_shift(const UniPoly& f, const Rat& c);

/// Scale to a primitive integer polynomial with positive leading coefficient.
std::vector<Int> primitive_integer_coeffs(const UniPoly& f);

std::string to_string(const UniPoly& f);

/// num/den with den monic and gcd(num, den) = 1.
class RatFun {
 public:
  RatFun() : num_(), den_(UniPoly::constant(1)) {}
  RatFun(UniPoly num);
  RatFun(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws InvalidArgument at a pole.
  Rat eval(const Rat& x) const;
  RatFun derivative() const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun operator-() const { return RatFun(-num_, den_); }
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }

  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void normalize();
  UniPoly num_;
  UniPoly den_;
};

}  // namespace fcancel
