#include "fcancel/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace fcancel {

MultiPoly MultiPoly::constant(unsigned vars, const Rat& c) {
  MultiPoly out(vars);
  out.add_term(Exponent(vars, 0), c);
  return out;
}

MultiPoly MultiPoly::monomial(const Rat& c, Exponent e) {
  MultiPoly out(static_cast<unsigned>(e.size()));
  out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::variable(unsigned vars, unsigned i) {
  Exponent e(vars, 0);
  e.at(i) = 1;
  return monomial(Rat(1), std::move(e));
}

unsigned MultiPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0u));
  return best;
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  if (e.size() != vars_) throw Error(Errc::DimensionMismatch, "exponent length differs from variable count");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::partial(unsigned i) const { return partial_scaled(i, 1); }

MultiPoly MultiPoly::partial_scaled(unsigned i, unsigned j) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] < j) continue;
    Exponent f = e;
    f[i] -= j;
    out.add_term(f, c * Rat(binomial(e[i], j)));
  }
  return out;
}

bool MultiPoly::is_integral() const {
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

Nat MultiPoly::coefficient_denominator() const {
  Nat acc = 1;
  for (const auto& [e, c] : terms_) absorb_denominator(acc, c);
  return acc;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (vars_ == 0 && terms_.empty()) vars_ = rhs.vars_;
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (vars_ == 0 && terms_.empty()) vars_ = rhs.vars_;
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) throw Error(Errc::DimensionMismatch, "multiplying polynomials in different rings");
  MultiPoly out(a.vars_);
  Exponent e(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (unsigned i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly pow(const MultiPoly& f, unsigned e) {
  MultiPoly out = MultiPoly::constant(f.vars(), 1);
  for (unsigned i = 0; i < e; ++i) out = out * f;
  return out;
}

namespace {

void fill_exponents(unsigned vars, unsigned pos, unsigned left, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == vars) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned x = left + 1; x-- > 0;) {
    cur[pos] = x;
    fill_exponents(vars, pos + 1, left - x, cur, out);
  }
}

}  // namespace

std::vector<Exponent> exponents_of_degree(unsigned vars, unsigned d) {
  std::vector<Exponent> out;
  if (vars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent cur(vars, 0);
  fill_exponents(vars, 0, d, cur, out);
  return out;
}

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) out << " + ";
    first = false;
    out << to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << "*y" << (i + 1);
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

}  // namespace fcancel
