#pragma once

// RAII wrapper over an MPFR float with a precision given in decimal digits,
// plus a small outward-rounded interval type for threshold decisions.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace fcancel {

inline constexpr unsigned kDefaultDigits = 50;

mpfr_prec_t bits_for_digits(unsigned digits);

class Real {
 public:
  explicit Real(unsigned digits = kDefaultDigits);
  Real(long value, unsigned digits);
  Real(const mpz_class& value, unsigned digits, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(const mpq_class& value, unsigned digits, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real parse(const std::string& text, unsigned digits);

  unsigned digits() const { return digits_; }
  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  /// Decimal rendering with `significant` significant digits.
  std::string str(unsigned significant) const;
  std::string str() const { return str(digits_); }
  double to_double() const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_); }

 private:
  unsigned digits_;
  mpfr_t value_;
};

Real log(const Real& x);
Real exp(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real abs(const Real& x);

/// Closed interval [lo, hi] maintained with outward (directed) rounding.
struct Interval {
  Real lo;
  Real hi;

  static Interval exact(const mpq_class& value, unsigned digits);
  static Interval exact(const mpz_class& value, unsigned digits);

  bool certainly_positive() const;
  bool certainly_nonpositive() const;
  bool contains_zero() const { return !certainly_positive() && !certainly_nonpositive(); }
  Real mid() const;
  Real width() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws InvalidArgument if b straddles zero.
Interval operator/(const Interval& a, const Interval& b);
/// Requires a.lo > 0.
Interval log(const Interval& a);
Interval exp(const Interval& a);

}  // namespace fcancel
