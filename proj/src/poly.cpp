#include "fcancel/poly.hpp"

#include <sstream>

namespace fcancel {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, unsigned degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear(const Rat& root) { return UniPoly(std::vector<Rat>{-root, Rat(1)}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UniPoly::leading() const {
  if (c_.empty()) throw Error(Errc::InvalidArgument, "leading coefficient of zero polynomial");
  return c_.back();
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rat(1) / leading());
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (Rat& x : c_) x *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly out(*this);
  for (Rat& x : out.c_) x = -x;
  return out;
}

UniPoly pow(const UniPoly& f, unsigned e) {
  UniPoly out = UniPoly::constant(1);
  UniPoly base = f;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

UniPoly differentiate_scaled(const UniPoly& f, unsigned long n) {
  if (n == 0) return f;
  const auto& c = f.coeffs();
  if (c.size() <= n) return {};
  std::vector<Rat> out(c.size() - n);
  for (std::size_t d = n; d < c.size(); ++d) {
    if (c[d] != 0) out[d - n] = c[d] * Rat(binomial(d, n));
  }
  return UniPoly(std::move(out));
}

Nat integer_content_denominator(const UniPoly& f) { return common_denominator(f.coeffs()); }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  const Rat inv_lead = Rat(1) / b.leading();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rat> quot(a.degree() - db + 1);
  for (int d = a.degree(); d >= db; --d) {
    if (rem[d] == 0) continue;
    const Rat q = rem[d] * inv_lead;
    quot[d - db] = q;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= q * b.coeffs()[i];
  }
  rem.resize(db);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

namespace {

using IntPoly = std::vector<Int>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  Int g = 0;
  for (const Int& x : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (p.back() < 0) g = -g;
  for (Int& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntPoly pseudo_remainder(IntPoly r, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  while (r.size() >= b.size()) {
    const Int lead_r = r.back();
    const std::size_t shift = r.size() - b.size();
    for (Int& x : r) x *= b.back();
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= lead_r * b[i];
    trim(r);
  }
  return r;
}

}  // namespace

std::vector<Int> primitive_integer_coeffs(const UniPoly& f) {
  const Nat den = integer_content_denominator(f);
  IntPoly out;
  out.reserve(f.coeffs().size());
  for (const Rat& c : f.coeffs()) {
    Rat scaled = c * Rat(den);
    out.push_back(scaled.get_num());
  }
  make_primitive(out);
  return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntPoly x = primitive_integer_coeffs(a);
  IntPoly y = primitive_integer_coeffs(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = pseudo_remainder(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rat> out(x.begin(), x.end());
  return UniPoly(std::move(out)).monic();
}

UniPoly taylor_shift(const UniPoly& f, const Rat& c) {
  UniPoly acc;
  const UniPoly step(std::vector<Rat>{c, Rat(1)});
  const auto& coeffs = f.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * step + UniPoly::constant(*it);
  }
  return acc;
}

std::string to_string(const UniPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = f.degree(); d >= 0; --d) {
    const Rat& c = f.coeffs()[d];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const Rat mag = abs(c);
    if (d == 0 || mag != 1) out << to_string(Rat(mag));
    if (d >= 1) out << "z";
    if (d >= 2) out << "^" << d;
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// RatFun

RatFun::RatFun(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(1)) {}

RatFun::RatFun(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::InvalidArgument, "rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    const UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const Rat lead = den_.leading();
  if (lead != 1) {
    const Rat inv = Rat(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rat RatFun::eval(const Rat& x) const {
  const Rat d = den_.eval(x);
  if (d == 0) throw Error(Errc::InvalidArgument, "rational function evaluated at a pole");
  return num_.eval(x) / d;
}

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "rational function division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace fcancel
