#include "fcancel/real.hpp"

#include <cmath>
#include <utility>

#include "fcancel/error.hpp"

namespace fcancel {

mpfr_prec_t bits_for_digits(unsigned digits) {
  // 16 guard bits on top of the requested decimal precision.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

Real::Real(unsigned digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, unsigned digits) : Real(digits) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(const mpz_class& value, unsigned digits, mpfr_rnd_t rnd) : Real(digits) {
  mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

Real::Real(const mpq_class& value, unsigned digits, mpfr_rnd_t rnd) : Real(digits) {
  mpfr_set_q(value_, value.get_mpq_t(), rnd);
}

Real::Real(const Real& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : Real(other.digits_) { mpfr_swap(value_, other.value_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  std::swap(digits_, other.digits_);
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(const std::string& text, unsigned digits) {
  Real out(digits);
  if (mpfr_set_str(out.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw Error(Errc::Parse, "not a decimal real: '" + text + "'");
  }
  return out;
}

std::string Real::str(unsigned significant) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", static_cast<int>(significant), value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

Real& Real::operator+=(const Real& rhs) {
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

Real log(const Real& x) {
  Real out(x.digits());
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

Real exp(const Real& x) {
  Real out(x.digits());
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, const Real& exponent) {
  Real out(base.digits());
  mpfr_pow(out.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return out;
}

Real abs(const Real& x) {
  Real out(x.digits());
  mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

// ---------------------------------------------------------------------------
// Interval

Interval Interval::exact(const mpq_class& value, unsigned digits) {
  return {Real(value, digits, MPFR_RNDD), Real(value, digits, MPFR_RNDU)};
}

Interval Interval::exact(const mpz_class& value, unsigned digits) {
  return {Real(value, digits, MPFR_RNDD), Real(value, digits, MPFR_RNDU)};
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo.raw()) > 0; }

bool Interval::certainly_nonpositive() const { return mpfr_sgn(hi.raw()) <= 0; }

Real Interval::mid() const {
  Real out(lo.digits());
  mpfr_add(out.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
  mpfr_div_2ui(out.raw(), out.raw(), 1, MPFR_RNDN);
  return out;
}

Real Interval::width() const {
  Real out(lo.digits());
  mpfr_sub(out.raw(), hi.raw(), lo.raw(), MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out{Real(a.lo.digits()), Real(a.lo.digits())};
  mpfr_add(out.lo.raw(), a.lo.raw(), b.lo.raw(), MPFR_RNDD);
  mpfr_add(out.hi.raw(), a.hi.raw(), b.hi.raw(), MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out{Real(a.lo.digits()), Real(a.lo.digits())};
  mpfr_sub(out.lo.raw(), a.lo.raw(), b.hi.raw(), MPFR_RNDD);
  mpfr_sub(out.hi.raw(), a.hi.raw(), b.lo.raw(), MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  const unsigned digits = a.lo.digits();
  const Real* xs[2] = {&a.lo, &a.hi};
  const Real* ys[2] = {&b.lo, &b.hi};
  Interval out{Real(digits), Real(digits)};
  Real down(digits);
  Real up(digits);
  bool first = true;
  for (const Real* x : xs) {
    for (const Real* y : ys) {
      mpfr_mul(down.raw(), x->raw(), y->raw(), MPFR_RNDD);
      mpfr_mul(up.raw(), x->raw(), y->raw(), MPFR_RNDU);
      if (first || down < out.lo) out.lo = down;
      if (first || up > out.hi) out.hi = up;
      first = false;
    }
  }
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (!b.certainly_positive() && mpfr_sgn(b.hi.raw()) >= 0) {
    throw Error(Errc::InvalidArgument, "interval division by an interval containing zero");
  }
  const unsigned digits = a.lo.digits();
  Interval inv{Real(digits), Real(digits)};
  mpfr_ui_div(inv.lo.raw(), 1, b.hi.raw(), MPFR_RNDD);
  mpfr_ui_div(inv.hi.raw(), 1, b.lo.raw(), MPFR_RNDU);
  return a * inv;
}

Interval log(const Interval& a) {
  if (!a.certainly_positive()) {
    throw Error(Errc::InvalidArgument, "interval logarithm of a non-positive interval");
  }
  Interval out{Real(a.lo.digits()), Real(a.lo.digits())};
  mpfr_log(out.lo.raw(), a.lo.raw(), MPFR_RNDD);
  mpfr_log(out.hi.raw(), a.hi.raw(), MPFR_RNDU);
  return out;
}

Interval exp(const Interval& a) {
  Interval out{Real(a.lo.digits()), Real(a.lo.digits())};
  mpfr_exp(out.lo.raw(), a.lo.raw(), MPFR_RNDD);
  mpfr_exp(out.hi.raw(), a.hi.raw(), MPFR_RNDU);
  return out;
}

}  // namespace fcancel
