#include "fcancel/verify.hpp"

#include <functional>
#include <future>

#include "fcancel/constcoef.hpp"
#include "fcancel/falling.hpp"
#include "fcancel/fuchs.hpp"

namespace fcancel {

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rat random_rat(Rng& rng, long max_num, long max_den) {
  const long num = uniform_int(rng, -max_num, max_num);
  const long den = uniform_int(rng, 1, max_den);
  return make_rat(num, den);
}

UniPoly random_int_poly(Rng& rng, unsigned max_degree, long max_coeff) {
  const unsigned deg = static_cast<unsigned>(uniform_int(rng, 0, max_degree));
  std::vector<Rat> c(deg + 1);
  for (Rat& x : c) x = uniform_int(rng, -max_coeff, max_coeff);
  return UniPoly(std::move(c));
}

MatQ random_rat_matrix(Rng& rng, std::size_t n, long max_num, long max_den) {
  MatQ a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_rat(rng, max_num, max_den);
  return a;
}

MatQ random_int_matrix(Rng& rng, std::size_t n, long max_abs) {
  MatQ a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = uniform_int(rng, -max_abs, max_abs);
  return a;
}

MatQ random_unimodular(Rng& rng, std::size_t n, unsigned steps) {
  MatQ u = MatQ::identity(n);
  if (n < 2) return u;
  for (unsigned s = 0; s < steps; ++s) {
    const std::size_t i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    long c = uniform_int(rng, -2, 2);
    if (c == 0) c = 1;
    MatQ e = MatQ::identity(n);
    e(i, j) = c;
    u = u * e;
  }
  return u;
}

std::vector<Rat> scalar_lambda_set() {
  std::vector<Rat> out;
  for (const char* s : {"1/2", "2/3", "-7/10", "5/6", "-11/12", "3/7", "-5/8", "7/9", "1/11", "-13/15", "5/16",
                        "17/18", "-3/20", "8/21", "9/22", "-19/24", "11/25", "7/26", "-23/27", "29/30"})
    out.push_back(parse_rat(s));
  return out;
}

namespace {

MatQ conjugate_jordan(Rng& rng, const std::vector<JordanBlock>& blocks) {
  const MatQ j = jordan_matrix(blocks);
  const MatQ u = random_unimodular(rng, j.size(), 8);
  return u * j * inverse(u);
}

std::vector<JordanBlock> blocks_of(std::initializer_list<std::pair<const char*, unsigned>> data) {
  std::vector<JordanBlock> out;
  for (const auto& [v, s] : data) out.push_back({parse_rat(v), s});
  return out;
}

}  // namespace

std::vector<MatrixCase> matrix_catalog(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<MatrixCase> out;
  out.push_back({"idempotent", MatQ::from_rows({{make_rat(1, 2), make_rat(1, 2)}, {make_rat(1, 2), make_rat(1, 2)}})});
  const std::vector<std::pair<std::string, std::vector<JordanBlock>>> data = {
      {"J2(1/2)", blocks_of({{"1/2", 2}})},
      {"1/3+2/3", blocks_of({{"1/3", 1}, {"2/3", 1}})},
      {"J2(-1/4)+1/2", blocks_of({{"-1/4", 2}, {"1/2", 1}})},
      {"J3(1/5)", blocks_of({{"1/5", 3}})},
      {"J2(2/3)+2/3", blocks_of({{"2/3", 2}, {"2/3", 1}})},
      {"1/6-5/6+1/2", blocks_of({{"1/6", 1}, {"-5/6", 1}, {"1/2", 1}})},
      {"J2(3/7)+J2(1/7)", blocks_of({{"3/7", 2}, {"1/7", 2}})},
      {"J3(-1/2)+1/3", blocks_of({{"-1/2", 3}, {"1/3", 1}})},
      {"5/4+1/4+J2(3/2)", blocks_of({{"5/4", 1}, {"1/4", 1}, {"3/2", 2}})},
      {"J2(1/9)+0", blocks_of({{"1/9", 2}, {"0", 1}})},
      {"7/10+J3(-3/10)", blocks_of({{"7/10", 1}, {"-3/10", 3}})},
  };
  for (const auto& [name, blocks] : data) out.push_back({name, conjugate_jordan(rng, blocks)});
  return out;
}

std::vector<MatrixCase> semisimple_catalog(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<MatrixCase> out;
  out.push_back({"idempotent", MatQ::from_rows({{make_rat(1, 2), make_rat(1, 2)}, {make_rat(1, 2), make_rat(1, 2)}})});
  out.push_back({"diag(1/2,1/3)", MatQ::diag({make_rat(1, 2), make_rat(1, 3)})});
  out.push_back({"diag(2,-1)", MatQ::diag({Rat(2), Rat(-1)})});
  const std::vector<std::pair<std::string, std::vector<JordanBlock>>> data = {
      {"1/3+2/3", blocks_of({{"1/3", 1}, {"2/3", 1}})},
      {"1/4+1/4+1/2", blocks_of({{"1/4", 1}, {"1/4", 1}, {"1/2", 1}})},
      {"1/6-5/6+1/2", blocks_of({{"1/6", 1}, {"-5/6", 1}, {"1/2", 1}})},
      {"2/5+3/5", blocks_of({{"2/5", 1}, {"3/5", 1}})},
      {"-1/7+1/2+0", blocks_of({{"-1/7", 1}, {"1/2", 1}, {"0", 1}})},
  };
  for (const auto& [name, blocks] : data) out.push_back({name, conjugate_jordan(rng, blocks)});
  return out;
}

std::vector<HyperCase> hyper_catalog() {
  const auto make = [](std::initializer_list<const char*> a, std::initializer_list<const char*> b) {
    std::vector<Rat> alpha, beta;
    for (const char* s : a) alpha.push_back(parse_rat(s));
    for (const char* s : b) beta.push_back(parse_rat(s));
    return HyperParams::make(alpha, beta);
  };
  return {
      {"m1", make({"1/3"}, {"1/2"})},
      {"m2", make({"1/3", "1/5"}, {"1/2", "1/4"})},
      {"m2b", make({"2/7", "3/5"}, {"1/6", "5/6"})},
      {"m3", make({"1/3", "1/5", "1/7"}, {"1/2", "1/4", "2/3"})},
  };
}

HyperParams gamma_zero_params() {
  return HyperParams::make({make_rat(1, 2), make_rat(1, 4)}, {make_rat(1, 3), make_rat(5, 12)});
}

FuchsianSystem random_two_pole_system(Rng& rng, std::size_t dim) {
  const Rat g1 = make_rat(uniform_int(rng, -2, 2), uniform_int(rng, 1, 2));
  Rat g2 = g1;
  while (g2 == g1) g2 = make_rat(uniform_int(rng, -2, 2), uniform_int(rng, 1, 2));
  return FuchsianSystem::make(static_cast<unsigned>(dim), {g1, g2},
                              {random_rat_matrix(rng, dim, 3, 4), random_rat_matrix(rng, dim, 3, 4)}, false);
}

bool VerifyReport::ok() const {
  for (const CheckResult& c : checks)
    if (!c.ok()) return false;
  return true;
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json j{{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    checks.push_back(j);
  }
  return Json{{"ok", r.ok()}, {"checks", checks}};
}

namespace {

using CheckFn = std::function<CheckResult(Rng&)>;

struct Check {
  std::string name;
  CheckFn fn;
};

CheckResult named(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  return r;
}

// Records one case outcome, keeping the first counterexample.
void record(CheckResult& r, bool ok, const std::function<Json()>& describe) {
  if (ok) {
    ++r.passed;
  } else {
    if (!r.counterexample) r.counterexample = describe();
    ++r.failed;
  }
}

Json rat_list(const std::vector<Rat>& xs) {
  Json j = Json::array();
  for (const Rat& x : xs) j.push_back(to_string(x));
  return j;
}

std::vector<Check> identity_checks() {
  std::vector<Check> out;
  out.push_back({"delta_derivatives_r1_equals_delta", [](Rng&) {
                   CheckResult r = named("delta_derivatives_r1_equals_delta");
                   for (const Rat& l : scalar_lambda_set())
                     for (unsigned long n = 0; n <= 30; ++n)
                       record(r, delta_derivatives(l, n, 1)[0] == delta(l, n),
                              [&] { return Json{{"lambda", to_string(l)}, {"n", n}}; });
                   return r;
                 }});
  out.push_back({"scalar_operator_identity", [](Rng& rng) {
                   CheckResult r = named("scalar_operator_identity");
                   const auto lambdas = scalar_lambda_set();
                   for (int t = 0; t < 20; ++t) {
                     const Rat l = lambdas[static_cast<std::size_t>(uniform_int(rng, 0, 19))];
                     const unsigned n = static_cast<unsigned>(uniform_int(rng, 0, 8));
                     const UniPoly f = random_int_poly(rng, 8, 9);
                     record(r, scalar_identity_14(l, n, f),
                            [&] { return Json{{"lambda", to_string(l)}, {"n", n}, {"f", to_json(f)}}; });
                   }
                   return r;
                 }});
  out.push_back({"two_pole_scalar_identity", [](Rng& rng) {
                   CheckResult r = named("two_pole_scalar_identity");
                   for (int t = 0; t < 10; ++t) {
                     const std::vector<Rat> l{random_rat(rng, 5, 6), random_rat(rng, 5, 6)};
                     const std::vector<Rat> g{Rat(0), Rat(uniform_int(rng, 1, 3))};
                     const unsigned n = static_cast<unsigned>(uniform_int(rng, 0, 6));
                     const UniPoly f = random_int_poly(rng, 6, 9);
                     record(r, scalar_identity_16(l, g, n, f), [&] {
                       return Json{{"lambdas", rat_list(l)}, {"gammas", rat_list(g)}, {"n", n}, {"f", to_json(f)}};
                     });
                   }
                   return r;
                 }});
  out.push_back({"commuting_product_expansion", [](Rng& rng) {
                   CheckResult r = named("commuting_product_expansion");
                   for (int t = 0; t < 4; ++t) {
                     const MatQ a1 = MatQ::diag({random_rat(rng, 5, 6), random_rat(rng, 5, 6)});
                     const MatQ a2 = MatQ::diag({random_rat(rng, 5, 6), random_rat(rng, 5, 6)});
                     const FuchsianSystem sys = FuchsianSystem::make(2, {Rat(0), Rat(1)}, {a1, a2}, false);
                     const unsigned n = static_cast<unsigned>(uniform_int(rng, 0, 5));
                     record(r, operator_identity_24(sys, n, 3), [&] { return Json{{"system", to_json(sys)}, {"n", n}}; });
                   }
                   return r;
                 }});
  out.push_back({"bracket_expansion_matches_recurrence", [](Rng& rng) {
                   CheckResult r = named("bracket_expansion_matches_recurrence");
                   for (int t = 0; t < 4; ++t) {
                     const FuchsianSystem sys = random_two_pole_system(rng, 2);
                     const unsigned n = static_cast<unsigned>(uniform_int(rng, 0, 6));
                     record(r, qn_via_brackets(sys, n) == qn_recurrence(sys, n),
                            [&] { return Json{{"system", to_json(sys)}, {"n", n}}; });
                   }
                   return r;
                 }});
  out.push_back({"bracket_sum_identity", [](Rng& rng) {
                   CheckResult r = named("bracket_sum_identity");
                   for (int t = 0; t < 4; ++t) {
                     const std::vector<MatQ> mats{random_rat_matrix(rng, 2, 3, 4), random_rat_matrix(rng, 2, 3, 4)};
                     const unsigned k = static_cast<unsigned>(uniform_int(rng, 0, 6));
                     record(r, bracket_sum_identity(mats, k), [&] {
                       return Json{{"mats", Json::array({to_json(mats[0]), to_json(mats[1])})}, {"k", k}};
                     });
                   }
                   return r;
                 }});
  out.push_back({"partial_fractions", [](Rng&) {
                   CheckResult r = named("partial_fractions");
                   for (unsigned n1 = 0; n1 <= 5; ++n1)
                     for (unsigned n2 = 0; n2 <= 5; ++n2)
                       record(r, partial_fraction_identity(n1, n2), [&] { return Json{{"n1", n1}, {"n2", n2}}; });
                   return r;
                 }});
  out.push_back({"projector_relations", [](Rng&) {
                   CheckResult r = named("projector_relations");
                   for (const HyperCase& h : hyper_catalog()) {
                     const SpectralForms f = adjoint_system(h.params);
                     for (unsigned n2 = 1; n2 <= 6; ++n2)
                       record(r, projector_relations(f, n2), [&] { return Json{{"params", h.name}, {"n2", n2}}; });
                   }
                   return r;
                 }});
  out.push_back({"composition_rule", [](Rng& rng) {
                   CheckResult r = named("composition_rule");
                   for (int t = 0; t < 6; ++t) {
                     const MatQ a = random_rat_matrix(rng, 2, 3, 4);
                     const MatQ b = random_rat_matrix(rng, 2, 3, 4);
                     const LinearDiffOp lhs = compose(bracket_op(b), bracket_op(a)) -
                                              formal_product(bracket_op(a), bracket_op(b));
                     record(r, lhs == bracket_op(a * b),
                            [&] { return Json{{"A", to_json(a)}, {"B", to_json(b)}}; });
                   }
                   return r;
                 }});
  out.push_back({"partition_expansion", [](Rng& rng) {
                   CheckResult r = named("partition_expansion");
                   for (int t = 0; t < 3; ++t) {
                     const MatQ a = random_rat_matrix(rng, 2, 3, 4);
                     const unsigned n = static_cast<unsigned>(uniform_int(rng, 1, 5));
                     record(r, lemma17_rhs(a, n) == make_rat(1, factorial(n)) * script_A_n(a, n),
                            [&] { return Json{{"A", to_json(a)}, {"n", n}}; });
                   }
                   return r;
                 }});
  out.push_back({"tau_superadditivity", [](Rng&) {
                   CheckResult r = named("tau_superadditivity");
                   for (unsigned w = 0; w <= 12; ++w)
                     for (const auto& s : partitions(w))
                       for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
                         record(r, lemma19_inequality(s, Nat(p)), [&] {
                           Json js = Json::array();
                           for (unsigned x : s) js.push_back(x);
                           return Json{{"s", js}, {"p", p}};
                         });
                   return r;
                 }});
  return out;
}

std::vector<Check> divisibility_checks() {
  std::vector<Check> out;
  out.push_back({"scalar_certificates", [](Rng&) {
                   CheckResult r = named("scalar_certificates");
                   for (const Rat& l : scalar_lambda_set())
                     for (unsigned rr = 1; rr <= 3; ++rr)
                       for (const auto& c : certify_scalar_upto(l, 60, rr))
                         record(r, c.divides, [&] { return Json{{"lambda", to_string(l)}, {"r", rr}, {"certificate", to_json(c)}}; });
                   return r;
                 }});
  out.push_back({"matrix_certificates", [](Rng&) {
                   CheckResult r = named("matrix_certificates");
                   for (const MatrixCase& m : matrix_catalog())
                     for (const auto& c : certify_matrix_upto(m.a, 30))
                       record(r, c.divides, [&] { return Json{{"matrix", to_json(m.a)}, {"certificate", to_json(c)}}; });
                   return r;
                 }});
  out.push_back({"commuting_system_certificates", [](Rng&) {
                   CheckResult r = named("commuting_system_certificates");
                   const FuchsianSystem sys = FuchsianSystem::make(
                       2, {Rat(0), Rat(1)},
                       {MatQ::diag({make_rat(1, 2), make_rat(1, 3)}), MatQ::diag({make_rat(1, 6), make_rat(1, 5)})}, false);
                   for (unsigned long k = 1; k <= 15; ++k) {
                     const auto c = certify_system(sys, k);
                     record(r, c.divides, [&] { return Json{{"system", to_json(sys)}, {"certificate", to_json(c)}}; });
                   }
                   return r;
                 }});
  out.push_back({"adjoint_hypergeometric_certificates", [](Rng&) {
                   CheckResult r = named("adjoint_hypergeometric_certificates");
                   for (const HyperCase& h : hyper_catalog()) {
                     const Lemma11Report rep = certify_lemma11(h.params, 12);
                     record(r, rep.inner_divides && rep.outer.divides,
                            [&] { return Json{{"params", to_json(h.params)}, {"report", to_json(rep)}}; });
                   }
                   return r;
                 }});
  out.push_back({"constant_coefficient_certificates", [](Rng&) {
                   CheckResult r = named("constant_coefficient_certificates");
                   for (const MatrixCase& m : semisimple_catalog()) {
                     const auto c = certify_constcoef(m.a, 12, 4);
                     record(r, c.divides, [&] { return Json{{"matrix", to_json(m.a)}, {"certificate", to_json(c)}}; });
                   }
                   return r;
                 }});
  out.push_back({"series_denominators", [](Rng&) {
                   CheckResult r = named("series_denominators");
                   for (const HyperCase& h : hyper_catalog())
                     for (unsigned long k = 1; k <= 30; ++k)
                       record(r, divides(series_denominator(h.params, k), series_denominator_bound(h.params, k)),
                              [&] { return Json{{"params", to_json(h.params)}, {"k", k}}; });
                   return r;
                 }});
  out.push_back({"trinomial_lcm_growth", [](Rng&) {
                   CheckResult r = named("trinomial_lcm_growth");
                   for (unsigned long k = 2; k <= 120; ++k) {
                     const Real lhs = log(Real(g_k(k), kDefaultDigits));
                     const Real rhs = Real(2 * static_cast<long>(prime_count(k)), kDefaultDigits) *
                                      log(Real(static_cast<long>(k), kDefaultDigits));
                     record(r, lhs <= rhs, [&] { return Json{{"k", k}}; });
                   }
                   return r;
                 }});
  return out;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  std::vector<Check> checks;
  if (opts.suite == "identities" || opts.suite == "all") {
    auto c = identity_checks();
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (opts.suite == "divisibility" || opts.suite == "all") {
    auto c = divisibility_checks();
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (checks.empty()) throw Error(Errc::InvalidArgument, "unknown suite '" + opts.suite + "'");
  if (opts.force_failure) {
    checks.push_back({"forced_failure", [](Rng&) {
                        CheckResult r = named("forced_failure");
                        record(r, Rat(1) == Rat(2), [] { return Json{{"lhs", "1"}, {"rhs", "2"}}; });
                        return r;
                      }});
  }

  // Each check gets its own stream so results do not depend on scheduling.
  const auto run_one = [&](std::size_t i) {
    Rng rng(opts.seed + 0x9e3779b97f4a7c15ULL * (i + 1));
    return checks[i].fn(rng);
  };
  VerifyReport report;
  report.checks.resize(checks.size());
  const unsigned width = std::max(1u, opts.parallel);
  for (std::size_t start = 0; start < checks.size(); start += width) {
    std::vector<std::future<CheckResult>> batch;
    for (std::size_t i = start; i < std::min(checks.size(), start + width); ++i)
      batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, run_one, i));
    for (std::size_t i = 0; i < batch.size(); ++i) report.checks[start + i] = batch[i].get();
  }
  return report;
}

}  // namespace fcancel
