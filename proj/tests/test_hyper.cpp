#include <gtest/gtest.h>

#include "fcancel/hyper.hpp"
#include "fcancel/verify.hpp"
#include "oracles.hpp"

using namespace fcancel;

namespace {

HyperParams hp(std::vector<Rat> a, std::vector<Rat> b) { return HyperParams::make(std::move(a), std::move(b)); }

Rat r(long p, long q) { return make_rat(p, q); }

bool series_residual_vanishes(const HyperParams& p, unsigned N) {
  return oracle::series_residual_vanishes(build_system(p), p.alpha, p.beta, N);
}

MatQ homogeneous_block(const MatQ& a) {
  const std::size_t m = a.rows() - 1;
  MatQ out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = a(i + 1, j + 1);
  return out;
}

}  // namespace

TEST(Params, Validation) {
  EXPECT_THROW(hp({r(1, 2)}, {}), Error);
  try {
    hp({r(1, 3)}, {Rat(-2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidBeta);
  }
  EXPECT_NO_THROW(hp({r(1, 3)}, {Rat(2)}));
}

TEST(Series, GeometricAndFirstTerm) {
  const SeriesQ g = series(hp({Rat(1)}, {Rat(0)}), 4);
  for (unsigned n = 0; n <= 4; ++n) EXPECT_EQ(g[n], 1);
  const SeriesQ f = series(hp({r(1, 3)}, {r(1, 2)}), 5);
  EXPECT_EQ(f[0], 1);
  EXPECT_EQ(f[1], r(2, 9));
}

TEST(Series, MatchesFallingFactorialRatio) {
  for (const HyperCase& c : hyper_catalog()) {
    const SeriesQ f = series(c.params, 40);
    const auto expect = oracle::hyper_coeffs(c.params.alpha, c.params.beta, 40);
    EXPECT_EQ(f.coeffs(), expect) << c.name;
  }
}

TEST(Vieta, Values) {
  const Vieta v = vieta(hp({r(1, 3), r(1, 5)}, {Rat(0), Rat(0)}));
  EXPECT_EQ(v.sigma_alpha, (std::vector<Rat>{1, r(8, 15), r(1, 15)}));
  EXPECT_EQ(v.sigma_beta, (std::vector<Rat>{1, 0, 0}));
  EXPECT_EQ(elementary_symmetric({r(1, 2)}), (std::vector<Rat>{1, r(1, 2)}));
}

TEST(System, MOneShape) {
  const FuchsianSystem s = build_system(hp({r(1, 3)}, {r(1, 2)}));
  ASSERT_TRUE(s.augmented);
  EXPECT_EQ(s.residues[0], MatQ::from_rows({{0, 0}, {r(1, 2), r(-1, 2)}}));
  EXPECT_EQ(s.residues[1], MatQ::from_rows({{0, 0}, {r(-1, 2), r(1, 2) - r(1, 3)}}));
}

TEST(System, SeriesResidualThroughOrder59) {
  for (const HyperCase& c : hyper_catalog()) EXPECT_TRUE(series_residual_vanishes(c.params, 60)) << c.name;
  EXPECT_TRUE(series_residual_vanishes(gamma_zero_params(), 60));
}

TEST(System, ResidualDetectsWrongSystem) {
  const HyperParams p = hp({r(1, 3), r(1, 5)}, {r(1, 2), r(1, 4)});
  const HyperParams q = hp({r(2, 3), r(1, 5)}, {r(1, 2), r(1, 4)});
  EXPECT_TRUE(oracle::series_residual_vanishes(build_system(p), p.alpha, p.beta, 20));
  EXPECT_FALSE(oracle::series_residual_vanishes(build_system(q), p.alpha, p.beta, 20));
}

TEST(Adjoint, NegativeTransposeOfHomogeneousPart) {
  for (const HyperCase& c : hyper_catalog()) {
    const FuchsianSystem s = build_system(c.params);
    const FuchsianSystem a = adjoint_fuchsian(c.params);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(a.residues[i], -homogeneous_block(s.residues[i]).transpose()) << c.name;
    EXPECT_EQ(q_matrix(a)[0][0], -q_matrix(s)[1][1]);
  }
}

TEST(Adjoint, MOneClosedForms) {
  const SpectralForms f = adjoint_system(hp({r(1, 3)}, {r(1, 2)}));
  EXPECT_EQ(f.gamma, r(-1, 6));
  EXPECT_EQ(f.A1, MatQ::from_rows({{r(1, 2)}}));
  EXPECT_EQ(f.A2, MatQ::from_rows({{r(-1, 6)}}));
  EXPECT_EQ(f.T, MatQ::identity(1));
  EXPECT_EQ(f.a, std::vector<Rat>{r(-1, 6)});
}

TEST(Adjoint, SpectralClosedForms) {
  for (const HyperCase& c : hyper_catalog()) {
    const SpectralForms f = adjoint_system(c.params);
    const std::size_t m = c.params.m;
    EXPECT_EQ(f.A1 * f.T, f.T * MatQ::diag(c.params.beta)) << c.name;
    EXPECT_EQ(f.T_inv, inverse(f.T)) << c.name;
    // transformed residues: transpose of T^{-1} A T
    EXPECT_EQ((f.T_inv * f.A1 * f.T).transpose(), f.B1) << c.name;
    EXPECT_EQ((f.T_inv * f.A2 * f.T).transpose(), f.B2) << c.name;
    EXPECT_EQ(f.B1, MatQ::diag(c.params.beta));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) EXPECT_EQ(f.B2(i, j), f.a[j]);
    EXPECT_EQ(f.B2.trace(), f.gamma);
    EXPECT_EQ(f.B2 * f.B2, f.B2 * f.gamma);
    EXPECT_EQ(rank(f.A2), 1u);
    // char poly of A1 is prod (x - beta_j)
    UniPoly expect = UniPoly::constant(1);
    for (const Rat& b : c.params.beta) expect = expect * UniPoly::linear(b);
    EXPECT_EQ(char_poly(f.A1), expect);
  }
}

TEST(Adjoint, RepeatedBetaRejected) {
  try {
    adjoint_system(hp({r(1, 3), r(1, 5)}, {r(1, 2), r(1, 2)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RepeatedBeta);
  }
}

TEST(Projector, Relations) {
  for (const HyperCase& c : hyper_catalog()) {
    const SpectralForms f = adjoint_system(c.params);
    for (unsigned n2 = 1; n2 <= 6; ++n2) EXPECT_TRUE(projector_relations(f, n2)) << c.name;
  }
  const SpectralForms z = adjoint_system(gamma_zero_params());
  EXPECT_EQ(z.gamma, 0);
  EXPECT_TRUE((z.B2 * z.B2).is_zero());
  for (unsigned n2 = 1; n2 <= 6; ++n2) EXPECT_TRUE(projector_relations(z, n2));
}

TEST(PartialFractions, Identity) {
  for (unsigned n1 = 0; n1 <= 6; ++n1)
    for (unsigned n2 = 0; n2 <= 6; ++n2) EXPECT_TRUE(partial_fraction_identity(n1, n2));
}

TEST(AdjointCertificate, InnerBoundFormula) {
  EXPECT_EQ(lemma11_inner_bound(2, 6, false, 5), oracle::trinomial_lcm(5) * 2 * oracle::npow(6, 5) * oracle::ppp(6, 5));
  EXPECT_EQ(lemma11_inner_bound(2, 6, true, 5),
            oracle::trinomial_lcm(5) * 2 * oracle::npow(6, 5) * oracle::ppp(6, 5) * oracle::lcm_1_to(5));
}

TEST(AdjointCertificate, CatalogCertificates) {
  for (const HyperCase& c : hyper_catalog())
    for (unsigned long k : {1UL, 5UL, 15UL, 20UL}) {
      const Lemma11Report rep = certify_lemma11(c.params, k);
      EXPECT_TRUE(rep.inner_divides) << c.name << " k=" << k;
      EXPECT_TRUE(rep.outer.divides) << c.name << " k=" << k;
      EXPECT_FALSE(rep.gamma_zero);
    }
  const Lemma11Report m1 = certify_lemma11(hp({r(1, 3)}, {r(1, 2)}), 20);
  EXPECT_EQ(m1.b, 6);
}

TEST(AdjointCertificate, InnerPsiAgainstDirectBrackets) {
  const HyperParams p = hp({r(1, 3), r(1, 5)}, {r(1, 2), r(1, 4)});
  const SpectralForms f = adjoint_system(p);
  const unsigned long k = 8;
  Nat psi = 1;
  for (unsigned n1 = 0; n1 <= k; ++n1)
    for (unsigned n2 = 0; n1 + n2 <= k; ++n2) {
      const MatQ v = bracket({f.B1, f.B2}, {n1, n2}) * make_rat(1, oracle::fact(n1 + n2)) * f.gamma;
      psi = oracle::lcm(psi, oracle::mat_den(v));
    }
  EXPECT_EQ(certify_lemma11(p, k).inner_psi, psi);
}

TEST(AdjointCertificate, GammaZeroBranch) {
  const Lemma11Report rep = certify_lemma11(gamma_zero_params(), 20);
  EXPECT_TRUE(rep.gamma_zero);
  EXPECT_TRUE(rep.inner_divides);
  EXPECT_TRUE(rep.outer.divides);
}

TEST(AdjointCertificate, IntegralParameters) {
  const HyperParams p = hp({Rat(1), Rat(3)}, {Rat(2), Rat(5)});
  for (unsigned long k : {3UL, 9UL}) {
    const Lemma11Report rep = certify_lemma11(p, k);
    EXPECT_EQ(rep.b, 1);
    EXPECT_TRUE(oracle::divides(rep.inner_psi, oracle::trinomial_lcm(k)));
  }
}

TEST(GClass, PhiForFirstCatalogEntry) {
  const GClassEstimate g = g_class_phi(hp({r(1, 3)}, {r(1, 2)}));
  EXPECT_EQ(g.q1, 3);
  EXPECT_EQ(g.q2, 2);
  EXPECT_EQ(g.b, 6);
  EXPECT_EQ(g.rho_sum, 2);
  // e^2 / 2 evaluated independently
  const Real expect = exp(Real(2, 50)) / Real(2, 50);
  EXPECT_LT(std::abs(std::stod(g.Phi.value) - expect.to_double()), 1e-12);
  EXPECT_EQ(Real::parse(g.Phi.value, 50).str(40), expect.str(40));
}

TEST(GClass, IntegerParameters) {
  const GClassEstimate g = g_class_phi(hp({Rat(1), Rat(2)}, {Rat(0), Rat(3)}));
  EXPECT_EQ(g.b, 1);
  EXPECT_EQ(Real::parse(g.Phi.value, 50).str(40), (exp(Real(2, 50))).str(40));
}

TEST(GClass, SeriesDenominatorsDivideBound) {
  for (const HyperCase& c : hyper_catalog()) {
    const auto f = oracle::hyper_coeffs(c.params.alpha, c.params.beta, 80);
    Nat phi = 1;
    for (unsigned long k = 0; k <= 80; ++k) {
      phi = oracle::lcm(phi, f[k].get_den());
      if (k % 10 != 0) continue;
      EXPECT_EQ(series_denominator(c.params, k), phi);
      EXPECT_TRUE(oracle::divides(phi, series_denominator_bound(c.params, k))) << c.name << " k=" << k;
    }
  }
}

TEST(Wronskian, TraceAndExponents) {
  for (const HyperCase& c : hyper_catalog()) {
    const WronskianReport w = wronskian_checks(c.params);
    const Vieta v = vieta(c.params);
    EXPECT_TRUE(w.trace_matches) << c.name;
    EXPECT_EQ(w.e0, -v.sigma_beta[1]);
    EXPECT_EQ(w.e1, v.sigma_beta[1] - v.sigma_alpha[1]);
    EXPECT_TRUE(w.derived_solves);
    EXPECT_EQ(w.printed_e1, v.sigma_alpha[1] - v.sigma_beta[1]);
    // gamma != 0 on the catalog, so the printed sign does not solve.
    EXPECT_FALSE(w.printed_solves);
  }
}

TEST(Conditions, Equivalence) {
  EXPECT_TRUE(equivalent_mod_integers({r(1, 3), r(5, 2)}, {r(-1, 2), r(7, 3)}));
  EXPECT_FALSE(equivalent_mod_integers({r(1, 3), r(1, 3)}, {r(1, 3), r(2, 3)}));
  EXPECT_FALSE(equivalent_mod_integers({r(1, 3)}, {r(1, 3), r(1, 3)}));
}

TEST(Conditions, FirstCatalogEntryPasses) {
  const ConditionsReport c = check_conditions(hp({r(1, 3)}, {r(1, 2)}));
  EXPECT_TRUE(c.all());
  EXPECT_TRUE(c.diagnostics.empty());
}

TEST(Conditions, Violations) {
  const ConditionsReport lin = check_conditions(hp({r(3, 2)}, {r(1, 2)}));
  EXPECT_FALSE(lin.linear);
  EXPECT_FALSE(lin.diagnostics.empty());
  // u = 1/3, v = 1/5, m1 = m2 = 1: alpha ~ (u, v), beta ~ ((u+v)/2, (u+v+1)/2)
  const ConditionsReport belyi = check_conditions(hp({r(1, 3), r(1, 5)}, {r(4, 15), r(23, 30)}));
  EXPECT_TRUE(belyi.linear);
  EXPECT_FALSE(belyi.belyi);
  // invariant under shifting by 1/2
  const ConditionsReport kummer = check_conditions(hp({r(1, 3), r(5, 6)}, {r(1, 5), r(7, 10)}));
  EXPECT_FALSE(kummer.kummer);
  const ConditionsReport two = check_conditions(hp({r(1, 3)}, {r(5, 6)}));
  EXPECT_FALSE(two.two_gamma);
  EXPECT_TRUE(check_conditions(hp({r(1, 3), r(1, 5)}, {r(1, 2), r(1, 4)})).belyi);
}

TEST(IrrationalityDecision, ConstantsForFirstCatalogEntry) {
  const HyperParams p = hp({r(1, 3)}, {r(1, 2)});
  const Theorem6Report t = theorem6(p, r(1, 1000), r(1, 10), std::nullopt);
  EXPECT_TRUE(t.conditions.all());
  EXPECT_EQ(t.b0, 6);
  EXPECT_EQ(t.H, 1);
  // C0 = (8 b0 H e^{chi(b0)+3})^{eps(1 - ln eps)} Phi^{1 + eps + (2 - (m-1) eps)/(eps^m (m-1)!)}
  const unsigned d = 60;
  const Real eps = Real(1, d) / Real(10, d);
  const Real chi6 = log(Real(2, d)) + log(Real(3, d)) / Real(2, d);
  const Real base = Real(48, d) * exp(chi6 + Real(3, d));
  const Real phi = exp(Real(2, d)) / Real(2, d);
  const Real log_c0 = eps * (Real(1, d) - log(eps)) * log(base) + (Real(1, d) + eps + Real(2, d) / eps) * log(phi);
  EXPECT_LT(std::abs(std::stod(t.log_C0.value) - log_c0.to_double()), 1e-9);
  EXPECT_EQ(Real::parse(t.log_C0.value, 50).str(40), Real(log_c0).str(40));
  EXPECT_NEAR(log_c0.to_double(), 30.25, 0.02);
  EXPECT_TRUE(t.decided);
  EXPECT_FALSE(t.irrational);
}

TEST(IrrationalityDecision, FlipMatchesDisplayedInequality) {
  const HyperParams p = hp({r(1, 3)}, {r(1, 2)});
  bool seen_false = false, seen_true = false;
  for (unsigned j = 1; j <= 30; ++j) {
    const Nat a2 = oracle::npow(10, j);
    const Theorem6Report t = theorem6(p, make_rat(1, a2), r(1, 10), std::nullopt);
    ASSERT_TRUE(t.decided);
    // 0.7 ln a2 > ln C0 with a1 = 1
    const bool expect = Real(7, 50) / Real(10, 50) * log(Real(a2, 50)) > Real::parse(t.log_C0.value, 50);
    EXPECT_EQ(t.irrational, expect) << j;
    if (t.irrational) {
      seen_true = true;
      ASSERT_TRUE(t.eta0);
      EXPECT_GT(std::stod(t.eta0->value), 0.0);
    } else {
      EXPECT_FALSE(seen_true) << "verdict must be monotone in a2";
      seen_false = true;
    }
  }
  EXPECT_TRUE(seen_false);
  EXPECT_TRUE(seen_true);
}

TEST(IrrationalityDecision, Errors) {
  const HyperParams p = hp({r(1, 3)}, {r(1, 2)});
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Parse;
  };
  EXPECT_EQ(code([&] { theorem6(p, Rat(0), r(1, 10), std::nullopt); }), Errc::XiZero);
  EXPECT_EQ(code([&] { theorem6(p, r(1, 2), r(1, 3), std::nullopt); }), Errc::EpsilonOutOfRange);
  EXPECT_EQ(code([&] { theorem6(hp({r(3, 2)}, {r(1, 2)}), r(1, 2), r(1, 10), std::nullopt); }), Errc::ConditionsFailed);
}

TEST(IrrationalityDecision, EtaAdmissibility) {
  const HyperParams p = hp({r(1, 3)}, {r(1, 2)});
  const Nat a2 = oracle::npow(10, 25);
  const Theorem6Report t = theorem6(p, make_rat(1, a2), r(1, 10), Real(100, 50));
  ASSERT_TRUE(t.irrational);
  ASSERT_TRUE(t.eta_admissible);
  EXPECT_EQ(*t.eta_admissible, 100 > std::stod(t.eta0->value));
  ASSERT_TRUE(t.measure_exponent);
}
