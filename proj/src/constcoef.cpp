#include "fcancel/constcoef.hpp"

#include <numeric>
#include <sstream>

#include "fcancel/falling.hpp"
#include "fcancel/matfun.hpp"

namespace fcancel {

LinearDiffOp LinearDiffOp::identity(unsigned vars) { return scalar(vars, 1); }

LinearDiffOp LinearDiffOp::scalar(unsigned vars, const Rat& c) {
  LinearDiffOp out(vars);
  out.add_term(Exponent(vars, 0), MultiPoly::constant(vars, c));
  return out;
}

unsigned LinearDiffOp::order() const {
  unsigned best = 0;
  for (const auto& [d, c] : terms_) best = std::max(best, std::accumulate(d.begin(), d.end(), 0u));
  return best;
}

void LinearDiffOp::add_term(const Exponent& d, const MultiPoly& c) {
  if (c.is_zero()) return;
  if (d.size() != vars_ || c.vars() != vars_) throw Error(Errc::DimensionMismatch, "operator term arity");
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

// Plain (unscaled) mixed partial d^{|d|} f / dy^d.
MultiPoly mixed_partial(MultiPoly f, const Exponent& d) {
  for (unsigned i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    f = f.partial_scaled(i, d[i]) * Rat(factorial(d[i]));
  }
  return f;
}

}  // namespace

MultiPoly LinearDiffOp::apply(const MultiPoly& f) const {
  MultiPoly out(vars_);
  for (const auto& [d, c] : terms_) {
    const MultiPoly g = mixed_partial(f, d);
    if (!g.is_zero()) out += c * g;
  }
  return out;
}

LinearDiffOp& LinearDiffOp::operator+=(const LinearDiffOp& rhs) {
  for (const auto& [d, c] : rhs.terms_) add_term(d, c);
  return *this;
}

LinearDiffOp& LinearDiffOp::operator-=(const LinearDiffOp& rhs) {
  for (const auto& [d, c] : rhs.terms_) add_term(d, Rat(-1) * c);
  return *this;
}

LinearDiffOp& LinearDiffOp::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= s;
  return *this;
}

LinearDiffOp bracket_op(const MatQ& a) {
  const unsigned m = static_cast<unsigned>(a.size());
  LinearDiffOp out(m);
  for (unsigned l = 0; l < m; ++l) {
    MultiPoly coeff(m);
    for (unsigned j = 0; j < m; ++j) coeff += a(l, j) * MultiPoly::variable(m, j);
    Exponent d(m, 0);
    d[l] = 1;
    out.add_term(d, coeff);
  }
  return out;
}

LinearDiffOp formal_product(const LinearDiffOp& a, const LinearDiffOp& b) {
  if (a.vars() != b.vars()) throw Error(Errc::DimensionMismatch, "operator arity");
  LinearDiffOp out(a.vars());
  for (const auto& [d, c] : a.terms())
    for (const auto& [e, c2] : b.terms()) {
      Exponent de = d;
      for (std::size_t i = 0; i < de.size(); ++i) de[i] += e[i];
      out.add_term(de, c * c2);
    }
  return out;
}

LinearDiffOp formal_product(const std::vector<LinearDiffOp>& ops, unsigned vars) {
  LinearDiffOp out = LinearDiffOp::identity(vars);
  for (const LinearDiffOp& op : ops) out = formal_product(out, op);
  return out;
}

LinearDiffOp formal_power(const LinearDiffOp& a, unsigned e) {
  LinearDiffOp out = LinearDiffOp::identity(a.vars());
  for (unsigned i = 0; i < e; ++i) out = formal_product(out, a);
  return out;
}

namespace {

// Every k <= d componentwise.
void sub_indices(const Exponent& d, std::size_t i, Exponent& cur, std::vector<Exponent>& out) {
  if (i == d.size()) {
    out.push_back(cur);
    return;
  }
  for (unsigned v = 0; v <= d[i]; ++v) {
    cur[i] = v;
    sub_indices(d, i + 1, cur, out);
  }
}

}  // namespace

LinearDiffOp compose(const LinearDiffOp& outer, const LinearDiffOp& inner) {
  if (outer.vars() != inner.vars()) throw Error(Errc::DimensionMismatch, "operator arity");
  const unsigned m = outer.vars();
  LinearDiffOp out(m);
  for (const auto& [d, c] : outer.terms()) {
    std::vector<Exponent> ks;
    Exponent cur(m, 0);
    sub_indices(d, 0, cur, ks);
    for (const auto& [e, c2] : inner.terms()) {
      for (const Exponent& k : ks) {
        const MultiPoly dc2 = mixed_partial(c2, k);
        if (dc2.is_zero()) continue;
        Rat weight = 1;
        Exponent idx(m);
        for (unsigned i = 0; i < m; ++i) {
          weight *= Rat(binomial(d[i], k[i]));
          idx[i] = d[i] - k[i] + e[i];
        }
        out.add_term(idx, weight * (c * dc2));
      }
    }
  }
  return out;
}

LinearDiffOp script_A_n(const MatQ& a, unsigned n, bool reversed) {
  const unsigned m = static_cast<unsigned>(a.size());
  const LinearDiffOp br = bracket_op(a);
  LinearDiffOp out = LinearDiffOp::identity(m);
  for (unsigned i = 0; i < n; ++i) {
    const LinearDiffOp factor = br - LinearDiffOp::scalar(m, Rat(i));
    out = reversed ? compose(out, factor) : compose(factor, out);
  }
  return out;
}

namespace {

void partitions_rec(unsigned n, unsigned part, unsigned remaining, std::vector<unsigned>& s,
                    std::vector<std::vector<unsigned>>& out) {
  if (part == 0) {
    if (remaining == 0) out.push_back(s);
    return;
  }
  for (unsigned count = 0; count * part <= remaining; ++count) {
    s[part - 1] = count;
    partitions_rec(n, part - 1, remaining - count * part, s, out);
  }
  s[part - 1] = 0;
}

}  // namespace

std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> s(n, 0);
  partitions_rec(n, n, n, s, out);
  return out;
}

LinearDiffOp lemma17_rhs(const MatQ& a, unsigned n, const ProductLimits& limits) {
  const unsigned m = static_cast<unsigned>(a.size());
  if (m > limits.max_vars) throw Error(Errc::LimitExceeded, "too many variables for formal products");
  const std::vector<MatQ> deltas = matrix_delta_range(a, n);
  std::vector<LinearDiffOp> brackets;
  for (const MatQ& d : deltas) brackets.push_back(bracket_op(d));

  LinearDiffOp out(m);
  for (const std::vector<unsigned>& s : partitions(n)) {
    const unsigned factors = std::accumulate(s.begin(), s.end(), 0u);
    if (factors > limits.max_factors) throw Error(Errc::LimitExceeded, "formal product has too many factors");
    LinearDiffOp term = LinearDiffOp::identity(m);
    Nat denom = 1;
    for (unsigned i = 1; i <= n; ++i) {
      if (s[i - 1] == 0) continue;
      term = formal_product(term, formal_power(brackets[i], s[i - 1]));
      denom *= factorial(s[i - 1]);
    }
    out += make_rat(1, denom) * term;
  }
  return out;
}

namespace {

std::vector<MultiPoly> monomials_upto(unsigned vars, unsigned degree_cap) {
  std::vector<MultiPoly> out;
  for (unsigned d = 0; d <= degree_cap; ++d)
    for (const Exponent& e : exponents_of_degree(vars, d)) out.push_back(MultiPoly::monomial(1, e));
  return out;
}

}  // namespace

bool same_action(const LinearDiffOp& a, const LinearDiffOp& b, unsigned degree_cap) {
  if (a.vars() != b.vars()) return false;
  for (const MultiPoly& f : monomials_upto(a.vars(), degree_cap))
    if (!(a.apply(f) == b.apply(f))) return false;
  return true;
}

bool monomial_integrality_check(const MatQ& b, unsigned s, unsigned degree_cap) {
  if (!b.is_integral()) throw Error(Errc::InvalidArgument, "matrix must be integral");
  const LinearDiffOp op = make_rat(1, factorial(s)) * formal_power(bracket_op(b), s);
  for (const MultiPoly& f : monomials_upto(static_cast<unsigned>(b.size()), degree_cap))
    if (!op.apply(f).is_integral()) return false;
  return true;
}

bool lemma19_inequality(const std::vector<unsigned>& s, const Nat& p) {
  unsigned long lhs = 0;
  unsigned long weight = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    lhs += s[i] * tau_p(p, i + 1);
    weight += (i + 1) * s[i];
  }
  return lhs <= tau_p(p, weight);
}

CancellationCertificate certify_constcoef(const MatQ& a, unsigned long k, unsigned degree_cap, unsigned digits) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be at least 1");
  const SpectralData sd = spectral(a);
  if (sd.r_max > 1) throw Error(Errc::RepeatedRootMinPoly, "minimal polynomial has a repeated root");
  const unsigned m = static_cast<unsigned>(a.size());
  const LinearDiffOp br = bracket_op(a);

  CancellationCertificate cert;
  cert.k = k;
  for (const MultiPoly& f : monomials_upto(m, degree_cap)) {
    MultiPoly g = f;
    for (unsigned long n = 1; n <= k; ++n) {
      g = br.apply(g) - Rat(static_cast<long>(n - 1)) * g;
      if (g.is_zero()) break;
      cert.psi_k = lcm(cert.psi_k, (make_rat(1, factorial(n)) * g).coefficient_denominator());
    }
  }
  const Nat tt = sd.t1 * sd.t2;
  Nat ttbk;
  mpz_pow_ui(ttbk.get_mpz_t(), Nat(tt * sd.b).get_mpz_t(), k);
  cert.bound_k = ttbk * prime_power_product(sd.b, k);
  cert.asymptotic_constant = ReportedReal::from(Real(Nat(tt * sd.b), digits) * exp(chi(sd.b, digits)));
  finalize(cert, digits);
  return cert;
}

std::string to_string(const LinearDiffOp& op) {
  if (op.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : op.terms()) {
    out << (first ? "" : " + ") << "(" << to_string(c) << ")";
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i]) out << "*D" << (i + 1) << (d[i] > 1 ? "^" + std::to_string(d[i]) : "");
    first = false;
  }
  return out.str();
}

}  // namespace fcancel
