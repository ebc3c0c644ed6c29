#include "fcancel/hyper.hpp"

#include <algorithm>

#include "fcancel/falling.hpp"
#include "fcancel/matfun.hpp"

namespace fcancel {

HyperParams HyperParams::make(std::vector<Rat> alpha, std::vector<Rat> beta) {
  if (alpha.size() != beta.size()) throw Error(Errc::InvalidArgument, "alpha and beta must have the same length");
  if (alpha.empty()) throw Error(Errc::InvalidArgument, "at least one parameter pair is required");
  for (const Rat& b : beta) {
    if (b.get_den() == 1 && b < 0) throw Error(Errc::InvalidBeta, "beta = " + to_string(b) + " is a negative integer");
  }
  HyperParams p;
  p.m = static_cast<unsigned>(alpha.size());
  p.alpha = std::move(alpha);
  p.beta = std::move(beta);
  return p;
}

SeriesQ series(const HyperParams& p, unsigned N) {
  SeriesQ f(N);
  f[0] = 1;
  for (unsigned n = 1; n <= N; ++n) {
    Rat ratio = 1;
    for (unsigned j = 0; j < p.m; ++j) ratio *= (-p.alpha[j] - (n - 1)) / (-p.beta[j] - n);
    f[n] = f[n - 1] * ratio;
  }
  return f;
}

std::vector<Rat> elementary_symmetric(const std::vector<Rat>& xs) {
  std::vector<Rat> e{Rat(1)};
  for (const Rat& x : xs) {
    e.push_back(0);
    for (std::size_t l = e.size() - 1; l >= 1; --l) e[l] += x * e[l - 1];
  }
  return e;
}

Vieta vieta(const HyperParams& p) { return {elementary_symmetric(p.alpha), elementary_symmetric(p.beta)}; }

FuchsianSystem build_system(const HyperParams& p) {
  const unsigned m = p.m;
  const Vieta v = vieta(p);
  MatQ at0(m + 1), at1(m + 1);
  for (unsigned l = 1; l < m; ++l) at0(l, l + 1) = 1;
  at0(m, 0) = v.sigma_beta[m];
  at1(m, 0) = -v.sigma_beta[m];
  for (unsigned j = 1; j <= m; ++j) {
    at0(m, j) = -v.sigma_beta[m + 1 - j];
    at1(m, j) = v.sigma_beta[m + 1 - j] - v.sigma_alpha[m + 1 - j];
  }
  return FuchsianSystem::make(m, {Rat(0), Rat(1)}, {at0, at1}, true);
}

FuchsianSystem adjoint_fuchsian(const HyperParams& p) {
  const unsigned m = p.m;
  const Vieta v = vieta(p);
  MatQ a1(m), a2(m);
  for (unsigned l = 1; l < m; ++l) a1(l, l - 1) = -1;
  for (unsigned l = 0; l < m; ++l) {
    a1(l, m - 1) = v.sigma_beta[m - l];
    a2(l, m - 1) = v.sigma_alpha[m - l] - v.sigma_beta[m - l];
  }
  return FuchsianSystem::make(m, {Rat(0), Rat(1)}, {a1, a2}, false);
}

namespace {

void require_distinct_beta(const HyperParams& p) {
  for (unsigned i = 0; i < p.m; ++i)
    for (unsigned j = i + 1; j < p.m; ++j)
      if (p.beta[i] == p.beta[j]) throw Error(Errc::RepeatedBeta, "beta_" + std::to_string(i + 1) + " = beta_" +
                                                                      std::to_string(j + 1));
}

std::vector<Rat> without(const std::vector<Rat>& xs, std::size_t skip) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (i != skip) out.push_back(xs[i]);
  return out;
}

Rat frac(const Rat& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rat(fl);
}

}  // namespace

SpectralForms adjoint_system(const HyperParams& p) {
  require_distinct_beta(p);
  const unsigned m = p.m;
  const FuchsianSystem adj = adjoint_fuchsian(p);
  SpectralForms f;
  const Vieta v = vieta(p);
  f.sigma_alpha = v.sigma_alpha;
  f.sigma_beta = v.sigma_beta;
  f.gamma = v.sigma_alpha[1] - v.sigma_beta[1];
  f.A1 = adj.residues[0];
  f.A2 = adj.residues[1];

  f.T = MatQ(m);
  for (unsigned j = 0; j < m; ++j) {
    const std::vector<Rat> e = elementary_symmetric(without(p.beta, j));
    for (unsigned l = 0; l < m; ++l) f.T(l, j) = e[m - 1 - l];
  }

  f.T_inv = MatQ(m);
  for (unsigned l = 0; l < m; ++l) {
    Rat scale = 1;
    for (unsigned k = 0; k < m; ++k)
      if (k != l) scale /= p.beta[l] - p.beta[k];
    Rat power = 1;
    for (unsigned j = 0; j < m; ++j) {
      // 1-based sign (-1)^{m + j}
      const bool negative = ((m + j + 1) % 2) == 1;
      f.T_inv(l, j) = (negative ? -scale : scale) * power;
      power *= p.beta[l];
    }
  }

  f.a.resize(m);
  for (unsigned j = 0; j < m; ++j) {
    Rat aj = -(p.beta[j] - p.alpha[j]);
    for (unsigned k = 0; k < m; ++k)
      if (k != j) aj *= (p.beta[j] - p.alpha[k]) / (p.beta[j] - p.beta[k]);
    f.a[j] = aj;
  }
  f.B1 = MatQ::diag(p.beta);
  f.B2 = MatQ(m);
  for (unsigned l = 0; l < m; ++l)
    for (unsigned j = 0; j < m; ++j) f.B2(l, j) = f.a[j];
  return f;
}

bool projector_relations(const SpectralForms& f, unsigned n2) {
  if (n2 < 1) throw Error(Errc::InvalidArgument, "n2 must be at least 1");
  if (!(f.B2 * f.B2 == f.gamma * f.B2)) return false;
  return matrix_falling(f.B2, n2) == falling(f.gamma - 1, n2 - 1) * f.B2;
}

Nat lemma11_inner_bound(const Nat& a, const Nat& b, bool gamma_zero, unsigned long k) {
  Nat bk;
  mpz_pow_ui(bk.get_mpz_t(), b.get_mpz_t(), k);
  Nat out = g_k(k) * a * bk * prime_power_product(b, k);
  if (gamma_zero) out *= lcm_upto(k);
  return out;
}

Lemma11Report certify_lemma11(const HyperParams& p, unsigned long k, unsigned digits) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be at least 1");
  const SpectralForms f = adjoint_system(p);
  Lemma11Report r;
  r.gamma_zero = f.gamma == 0;
  r.a = common_denominator(f.a);
  std::vector<Rat> gb{f.gamma};
  gb.insert(gb.end(), p.beta.begin(), p.beta.end());
  r.b = common_denominator(gb);

  BracketTable table({f.B1, f.B2});
  const Rat weight = r.gamma_zero ? Rat(1) : f.gamma;
  for (unsigned n = 0; n <= k; ++n) {
    const Rat scale = weight * make_rat(1, factorial(n));
    for (unsigned n1 = 0; n1 <= n; ++n1) {
      const MatQ& br = table.get({n1, n - n1});
      for (const Rat& x : br.data()) absorb_denominator(r.inner_psi, scale * x);
    }
  }
  r.inner_bound = lemma11_inner_bound(r.a, r.b, r.gamma_zero, k);
  r.inner_divides = divides(r.inner_psi, r.inner_bound);

  r.outer = certify_system(adjoint_fuchsian(p), k, digits);
  Nat transfer = entry_denominator(f.T) * entry_denominator(f.T_inv);
  if (!r.gamma_zero) transfer *= abs(f.gamma.get_num());
  r.outer.bound_k = transfer * r.inner_bound;
  const long extra = r.gamma_zero ? 3 : 2;
  r.outer.asymptotic_constant =
      ReportedReal::from(Real(r.b, digits) * exp(chi(r.b, digits) + Real(extra, digits)));
  finalize(r.outer, digits);
  return r;
}

bool partial_fraction_identity(unsigned n1, unsigned n2) {
  const UniPoly z = UniPoly::monomial(1, 1);
  const UniPoly one_minus_z(std::vector<Rat>{Rat(1), Rat(-1)});
  const RatFun lhs(UniPoly::constant(1), pow(z, n1 + 1) * pow(one_minus_z, n2 + 1));
  RatFun rhs;
  for (unsigned k = 0; k <= n1; ++k)
    rhs += RatFun(UniPoly::constant(Rat(binomial(n1 + n2 - k, n2))), pow(z, k + 1));
  for (unsigned k = 0; k <= n2; ++k)
    rhs += RatFun(UniPoly::constant(Rat(binomial(n1 + n2 - k, n1))), pow(one_minus_z, k + 1));
  return lhs == rhs;
}

GClassEstimate g_class_phi(const HyperParams& p, unsigned digits) {
  GClassEstimate g;
  for (const Rat& a : p.alpha) g.q1 *= denominator(a);
  for (const Rat& b : p.beta) {
    g.q2 *= denominator(b);
    g.b_js.push_back(denominator(b));
  }
  g.b = lcm(g.q1, g.q2);
  for (const Nat& bj : g.b_js) g.rho_sum += rho_exact(bj);
  g.Phi = ReportedReal::from(exp(Real(g.rho_sum, digits)) * Real(make_rat(g.q1, g.b), digits));
  return g;
}

Nat series_denominator(const HyperParams& p, unsigned long k) {
  const SeriesQ f = series(p, static_cast<unsigned>(k));
  return common_denominator(f.coeffs());
}

Nat series_denominator_bound(const HyperParams& p, unsigned long k) {
  Nat out = 1;
  for (unsigned j = 0; j < p.m; ++j) {
    const Nat ba = denominator(p.alpha[j]);
    Nat bak;
    mpz_pow_ui(bak.get_mpz_t(), ba.get_mpz_t(), k);
    Nat l = 1;
    const Int a = p.beta[j].get_num();
    const Nat b = p.beta[j].get_den();
    for (unsigned long i = 1; i <= k; ++i) l = lcm(l, Nat(abs(a + b * i)));
    out *= bak * prime_power_product(ba, k) * l;
  }
  return out;
}

WronskianReport wronskian_checks(const HyperParams& p) {
  WronskianReport w;
  const Vieta v = vieta(p);
  w.sigma1_alpha = v.sigma_alpha[1];
  w.sigma1_beta = v.sigma_beta[1];

  const FuchsianSystem sys = build_system(p);
  RatFun trace;
  for (std::size_t i = 0; i < sys.gammas.size(); ++i) {
    Rat t = 0;
    for (unsigned l = 1; l <= p.m; ++l) t += sys.residues[i](l, l);
    trace += RatFun(UniPoly::constant(t), UniPoly::linear(sys.gammas[i]));
  }
  const UniPoly z = UniPoly::monomial(1, 1);
  const RatFun expected(UniPoly(std::vector<Rat>{w.sigma1_beta, -w.sigma1_alpha}), z * UniPoly::linear(1));
  w.trace_matches = trace == expected;

  w.e0 = (trace * RatFun(z)).eval(0);
  w.e1 = (trace * RatFun(UniPoly::linear(1))).eval(1);
  w.printed_e0 = -w.sigma1_beta;
  w.printed_e1 = w.sigma1_alpha - w.sigma1_beta;

  // d/dz log(z^{e0} (1-z)^{e1}) = e0/z + e1/(z-1)
  const auto log_derivative = [&](const Rat& e0, const Rat& e1) {
    return RatFun(UniPoly::constant(e0), z) + RatFun(UniPoly::constant(e1), UniPoly::linear(1));
  };
  w.derived_solves = log_derivative(w.e0, w.e1) == trace;
  w.printed_solves = log_derivative(w.printed_e0, w.printed_e1) == trace;
  return w;
}

bool equivalent_mod_integers(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size()) return false;
  // Integer difference is an equivalence relation, so a perfect matching
  // exists iff the multisets of fractional parts agree.
  std::vector<Rat> fx, fy;
  for (const Rat& x : xs) fx.push_back(frac(x));
  for (const Rat& y : ys) fy.push_back(frac(y));
  std::sort(fx.begin(), fx.end());
  std::sort(fy.begin(), fy.end());
  return fx == fy;
}

namespace {

std::vector<Rat> coset(const Rat& u, unsigned n) {
  std::vector<Rat> out;
  for (unsigned i = 0; i < n; ++i) out.push_back((u + i) / n);
  return out;
}

// Searches u, v with xs ~ coset(u, m1) + coset(v, m2) and ys ~ coset(u + v, m).
// u/m1 + i/m1 must meet some x, so u is fixed mod 1 by m1 * x; likewise v.
std::optional<std::string> belyi_witness(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  const unsigned m = static_cast<unsigned>(xs.size());
  for (unsigned m1 = 1; m1 < m; ++m1) {
    const unsigned m2 = m - m1;
    for (const Rat& xu : xs) {
      const Rat u = frac(m1 * xu);
      for (const Rat& xv : xs) {
        const Rat v = frac(m2 * xv);
        std::vector<Rat> split = coset(u, m1);
        const std::vector<Rat> second = coset(v, m2);
        split.insert(split.end(), second.begin(), second.end());
        if (equivalent_mod_integers(xs, split) && equivalent_mod_integers(ys, coset(u + v, m))) {
          return "m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) + " u=" + to_string(u) +
                 " v=" + to_string(v);
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Rat> shifted(const std::vector<Rat>& xs, const Rat& s) {
  std::vector<Rat> out;
  for (const Rat& x : xs) out.push_back(x + s);
  return out;
}

}  // namespace

ConditionsReport check_conditions(const HyperParams& p) {
  ConditionsReport c;
  c.linear = true;
  for (unsigned l = 0; l < p.m && c.linear; ++l)
    for (unsigned j = 0; j < p.m; ++j)
      if (Rat(p.alpha[l] - p.beta[j]).get_den() == 1) {
        c.linear = false;
        c.diagnostics.push_back("condition 1: alpha_" + std::to_string(l + 1) + " - beta_" + std::to_string(j + 1) +
                                " = " + to_string(Rat(p.alpha[l] - p.beta[j])) + " is an integer");
        break;
      }

  c.belyi = true;
  if (auto w = belyi_witness(p.alpha, p.beta)) {
    c.belyi = false;
    c.diagnostics.push_back("condition 2: alpha split, beta full coset with " + *w);
  } else if (auto w2 = belyi_witness(p.beta, p.alpha)) {
    c.belyi = false;
    c.diagnostics.push_back("condition 2: beta split, alpha full coset with " + *w2);
  }

  c.kummer = true;
  for (unsigned m0 = 2; m0 <= p.m; ++m0) {
    if (p.m % m0 != 0) continue;
    const Rat s = make_rat(1, m0);
    if (equivalent_mod_integers(p.alpha, shifted(p.alpha, s)) && equivalent_mod_integers(p.beta, shifted(p.beta, s))) {
      c.kummer = false;
      c.diagnostics.push_back("condition 3: alpha and beta are invariant under shift by 1/" + std::to_string(m0));
      break;
    }
  }

  Rat gamma = 0;
  for (unsigned j = 0; j < p.m; ++j) gamma += p.alpha[j] - p.beta[j];
  c.two_gamma = Rat(2 * gamma).get_den() != 1;
  if (!c.two_gamma) c.diagnostics.push_back("condition 4: 2 gamma = " + to_string(Rat(2 * gamma)) + " is an integer");
  return c;
}

namespace {

Interval ival(const Rat& x, unsigned digits) { return Interval::exact(x, digits); }

Interval chi_interval(const Nat& b, unsigned digits) {
  Interval sum = ival(0, digits);
  for (const Nat& p : prime_divisors(b)) sum = sum + log(ival(Rat(p), digits)) / ival(Rat(p - 1), digits);
  return sum;
}

ReportedReal reported(const Real& x) { return ReportedReal::from(x); }

}  // namespace

Theorem6Report theorem6(const HyperParams& p, const Rat& xi, const Rat& epsilon, const std::optional<Real>& eta,
                        unsigned digits) {
  const unsigned m = p.m;
  if (xi == 0) throw Error(Errc::XiZero, "xi must be nonzero");
  if (epsilon <= 0 || epsilon >= make_rat(1, m + 2)) {
    throw Error(Errc::EpsilonOutOfRange, "epsilon must lie in (0, 1/" + std::to_string(m + 2) + ")");
  }
  require_distinct_beta(p);
  Theorem6Report r;
  r.conditions = check_conditions(p);
  if (!r.conditions.all()) {
    std::string what;
    for (const std::string& d : r.conditions.diagnostics) what += (what.empty() ? "" : "; ") + d;
    throw Error(Errc::ConditionsFailed, what);
  }
  r.xi = xi;
  r.epsilon = epsilon;

  const Vieta v = vieta(p);
  std::vector<Rat> gb{v.sigma_alpha[1] - v.sigma_beta[1]};
  gb.insert(gb.end(), p.beta.begin(), p.beta.end());
  r.b0 = common_denominator(gb);
  r.H = 0;
  for (const auto* s : {&v.sigma_alpha, &v.sigma_beta})
    for (const Rat& c : *s) r.H = std::max(r.H, Rat(abs(c)));

  const GClassEstimate g = g_class_phi(p, digits);
  r.Phi = g.Phi;

  // Everything below is an enclosure built from exact rationals.
  const Interval log_phi = ival(g.rho_sum, digits) + log(ival(Rat(g.q1), digits)) - log(ival(Rat(g.b), digits));
  const Interval eps = ival(epsilon, digits);
  const Interval one = ival(1, digits);
  Rat eps_pow_m = 1;
  for (unsigned i = 0; i < m; ++i) eps_pow_m *= epsilon;
  const Rat phi_exponent = 1 + epsilon + (2 - Rat(m - 1) * epsilon) / (eps_pow_m * Rat(factorial(m - 1)));
  const Interval log_base = log(ival(8 * Rat(r.b0) * r.H, digits)) + chi_interval(r.b0, digits) + ival(3, digits);
  const Interval base_exponent = eps * (one - log(eps));
  const Interval log_c0 = base_exponent * log_base + ival(phi_exponent, digits) * log_phi;

  const Nat a2 = xi.get_den();
  const Nat a1 = abs(xi.get_num());
  const Interval log_a2 = log(ival(Rat(a2), digits));
  const Interval log_a1 = log(ival(Rat(a1), digits));
  const Interval margin = ival(1 - Rat(m + 2) * epsilon, digits) * log_a2 - log_c0 -
                          ival(2 - Rat(m + 1) * epsilon, digits) * log_a1;
  const Interval numerator = ival(1 + epsilon, digits) * log_a2 + log_c0;

  r.log_C0 = reported(log_c0.mid());
  r.C0 = reported(exp(log_c0.mid()));
  r.margin_lo = reported(margin.lo);
  r.margin_hi = reported(margin.hi);
  r.decided = !margin.contains_zero();
  r.irrational = margin.certainly_positive();
  if (!margin.contains_zero()) {
    const Interval eta0 = numerator / margin;
    r.eta0 = reported(eta0.mid());
    if (r.irrational) r.measure_exponent = r.eta0;
    if (eta) r.eta_admissible = *eta > eta0.hi;
  }
  return r;
}

}  // namespace fcancel
