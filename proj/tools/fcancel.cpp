// Command-line front end. Exit codes: 0 success or verdict, 1 property
// failure, 2 input error, 3 unsupported input.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

#include "fcancel/constcoef.hpp"
#include "fcancel/falling.hpp"
#include "fcancel/fuchs.hpp"
#include "fcancel/hyper.hpp"
#include "fcancel/io.hpp"
#include "fcancel/matfun.hpp"
#include "fcancel/verify.hpp"

namespace {

using namespace fcancel;

enum Exit : int { kOk = 0, kPropertyFailure = 1, kInputError = 2, kUnsupported = 3 };

struct Common {
  bool json = false;
  unsigned precision = kDefaultDigits;
};

struct CertifyArgs {
  std::string lambda;
  std::string file;
  unsigned long k = 20;
  unsigned r = 1;
  unsigned degree_cap = 6;
};

struct HyperArgs {
  std::vector<std::string> alpha;
  std::vector<std::string> beta;
  std::string file;
  unsigned N = 10;
  unsigned long k = 20;
  std::string xi;
  std::string epsilon;
  std::string eta;
};

void check_common(const Common& c) {
  if (c.precision < 20) throw Error(Errc::InvalidArgument, "precision must be at least 20 digits");
}

void check_k(unsigned long k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be at least 1");
}

void print_certificate(const CancellationCertificate& c, const Common& common, const std::string& title) {
  if (common.json) {
    std::cout << to_json(c).dump(2) << "\n";
    return;
  }
  std::cout << title << "\n";
  std::cout << "  k                   " << c.k << "\n";
  std::cout << "  psi_k               " << to_string(c.psi_k) << "\n";
  if (c.bound_k) {
    std::cout << "  bound_k             " << to_string(*c.bound_k) << "\n";
    std::cout << "  divides             " << (c.divides ? "yes" : "NO") << "\n";
  } else {
    std::cout << "  bound_k             none (no-bound: measurement only)\n";
  }
  std::cout << "  ln(psi_k)/k         " << c.log_ratio_per_k.value << "\n";
  if (c.asymptotic_constant) std::cout << "  asymptotic constant " << c.asymptotic_constant->value << "\n";
}

int certificate_exit(const CancellationCertificate& c) { return !c.bound_k || c.divides ? kOk : kPropertyFailure; }

int cmd_certify_scalar(const CertifyArgs& a, const Common& common) {
  check_common(common);
  check_k(a.k);
  if (a.r < 1) throw Error(Errc::InvalidArgument, "r must be at least 1");
  const Rat lambda = parse_rat(a.lambda);
  const auto cert = certify_scalar(lambda, a.k, a.r, common.precision);
  print_certificate(cert, common, "scalar certificate for lambda = " + to_string(lambda));
  return certificate_exit(cert);
}

int cmd_certify_matrix(const CertifyArgs& a, const Common& common) {
  check_common(common);
  check_k(a.k);
  const MatQ m = matrix_from_json(read_json_file(a.file));
  const auto cert = certify_matrix(m, a.k, common.precision);
  print_certificate(cert, common, "matrix certificate");
  return certificate_exit(cert);
}

int cmd_certify_fuchsian(const CertifyArgs& a, const Common& common) {
  check_common(common);
  check_k(a.k);
  const FuchsianSystem sys = system_from_json(read_json_file(a.file));
  const auto cert = certify_system(sys, a.k, common.precision);
  print_certificate(cert, common, "Fuchsian system certificate");
  return certificate_exit(cert);
}

int cmd_certify_constcoef(const CertifyArgs& a, const Common& common) {
  check_common(common);
  check_k(a.k);
  const MatQ m = matrix_from_json(read_json_file(a.file));
  const auto cert = certify_constcoef(m, a.k, a.degree_cap, common.precision);
  print_certificate(cert, common, "constant-coefficient certificate");
  return certificate_exit(cert);
}

HyperParams hyper_params(const HyperArgs& a) {
  if (!a.file.empty()) return params_from_json(read_json_file(a.file));
  if (a.alpha.empty()) throw Error(Errc::InvalidArgument, "give --alpha/--beta or --file");
  std::vector<Rat> alpha, beta;
  for (const std::string& s : a.alpha) alpha.push_back(parse_rat(s));
  for (const std::string& s : a.beta) beta.push_back(parse_rat(s));
  return HyperParams::make(std::move(alpha), std::move(beta));
}

int cmd_hyper_series(const HyperArgs& a, const Common& common) {
  const HyperParams p = hyper_params(a);
  const SeriesQ f = series(p, a.N);
  if (common.json) {
    std::cout << Json{{"params", to_json(p)}, {"coefficients", to_json(f)}}.dump(2) << "\n";
  } else {
    for (unsigned n = 0; n <= a.N; ++n) std::cout << std::setw(4) << n << "  " << to_string(f[n]) << "\n";
  }
  return kOk;
}

int cmd_hyper_system(const HyperArgs& a, const Common& common) {
  const HyperParams p = hyper_params(a);
  Json j{{"params", to_json(p)}, {"system", to_json(build_system(p))}, {"adjoint", to_json(adjoint_fuchsian(p))}};
  try {
    j["spectral_forms"] = to_json(adjoint_system(p));
  } catch (const Error& e) {
    if (e.code() != Errc::RepeatedBeta) throw;
    j["spectral_forms"] = nullptr;
  }
  j["g_class"] = to_json(g_class_phi(p, common.precision));
  j["wronskian"] = to_json(wronskian_checks(p));
  // Structured either way; --json only changes indentation.
  std::cout << (common.json ? j.dump() : j.dump(2)) << "\n";
  return kOk;
}

int cmd_hyper_lemma11(const HyperArgs& a, const Common& common) {
  check_common(common);
  check_k(a.k);
  const HyperParams p = hyper_params(a);
  const Lemma11Report r = certify_lemma11(p, a.k, common.precision);
  if (common.json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << "adjoint hypergeometric system, k = " << a.k << (r.gamma_zero ? " (gamma = 0)" : "") << "\n";
    std::cout << "  a = " << to_string(r.a) << ", b = " << to_string(r.b) << "\n";
    std::cout << "  inner psi           " << to_string(r.inner_psi) << "\n";
    std::cout << "  inner bound         " << to_string(r.inner_bound) << "\n";
    std::cout << "  inner divides       " << (r.inner_divides ? "yes" : "NO") << "\n";
    print_certificate(r.outer, common, "  system certificate");
  }
  return r.inner_divides && r.outer.divides ? kOk : kPropertyFailure;
}

void print_conditions(const ConditionsReport& c) {
  const auto mark = [](bool b) { return b ? "holds" : "fails"; };
  std::cout << "  1) linear irreducibility   " << mark(c.linear) << "\n";
  std::cout << "  2) Belyi irreducibility    " << mark(c.belyi) << "\n";
  std::cout << "  3) Kummer irreducibility   " << mark(c.kummer) << "\n";
  std::cout << "  4) 2 gamma not an integer  " << mark(c.two_gamma) << "\n";
  for (const std::string& d : c.diagnostics) std::cout << "  - " << d << "\n";
}

int cmd_hyper_conditions(const HyperArgs& a, const Common& common) {
  const HyperParams p = hyper_params(a);
  const ConditionsReport c = check_conditions(p);
  if (common.json) {
    std::cout << to_json(c).dump(2) << "\n";
  } else {
    print_conditions(c);
  }
  return kOk;
}

int cmd_hyper_theorem6(const HyperArgs& a, const Common& common) {
  check_common(common);
  const HyperParams p = hyper_params(a);
  if (a.xi.empty() || a.epsilon.empty()) throw Error(Errc::InvalidArgument, "--xi and --epsilon are required");
  const Rat xi = parse_rat(a.xi);
  const Rat eps = parse_rat(a.epsilon);
  std::optional<Real> eta;
  if (!a.eta.empty()) eta = Real::parse(a.eta, common.precision);
  try {
    const Theorem6Report r = theorem6(p, xi, eps, eta, common.precision);
    if (common.json) {
      std::cout << to_json(r).dump(2) << "\n";
    } else {
      std::cout << "b0 = " << to_string(r.b0) << ", H = " << to_string(r.H) << "\n";
      std::cout << "Phi    = " << r.Phi.value << "\n";
      std::cout << "C0     = " << r.C0.value << "\n";
      std::cout << "eta0   = " << (r.eta0 ? r.eta0->value : "undefined") << "\n";
      std::cout << "margin in [" << r.margin_lo.value << ", " << r.margin_hi.value << "]\n";
      std::cout << "verdict: " << (!r.decided ? "undecided at this precision" : r.irrational ? "irrational" : "no conclusion")
                << "\n";
    }
  } catch (const Error& e) {
    if (e.code() != Errc::ConditionsFailed) throw;
    const ConditionsReport c = check_conditions(p);
    if (common.json) {
      std::cout << Json{{"conditions", to_json(c)}, {"verdict", Json{{"irrational", false}, {"reason", "conditions failed"}}}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "conditions failed; no verdict\n";
      print_conditions(c);
    }
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& opts, const Common& common) {
  const VerifyReport r = run_verify(opts);
  if (common.json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(40) << "check" << std::right << std::setw(8) << "passed" << std::setw(8)
              << "failed" << "\n";
    for (const CheckResult& c : r.checks)
      std::cout << std::left << std::setw(40) << c.name << std::right << std::setw(8) << c.passed << std::setw(8)
                << c.failed << "\n";
    for (const CheckResult& c : r.checks) {
      if (c.ok()) continue;
      std::cout << "first counterexample (" << c.name << "):\n" << c.counterexample->dump(2) << "\n";
      break;
    }
  }
  return r.ok() ? kOk : kPropertyFailure;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::IrrationalSpectrum:
    case Errc::RepeatedRootMinPoly:
    case Errc::RepeatedBeta:
    case Errc::NotCommuting:
    case Errc::LimitExceeded:
      return kUnsupported;
    default:
      return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact factorial-cancellation certificates"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Machine-readable output");
  app.add_option("--precision", common.precision, "Working precision in decimal digits (>= 20)");

  CertifyArgs cert;
  auto* certify = app.add_subcommand("certify", "Denominator certificates")->require_subcommand(1);
  auto* c_scalar = certify->add_subcommand("scalar", "Falling factorials of a rational");
  c_scalar->add_option("--lambda", cert.lambda, "Rational lambda")->required();
  c_scalar->add_option("--k", cert.k, "Level k >= 1");
  c_scalar->add_option("--r", cert.r, "Number of derivatives r >= 1");
  auto* c_matrix = certify->add_subcommand("matrix", "Matrix binomials Delta_n(A)");
  c_matrix->add_option("--file", cert.file, "Matrix JSON")->required();
  c_matrix->add_option("--k", cert.k, "Level k >= 1");
  auto* c_fuchs = certify->add_subcommand("fuchsian", "Fuchsian system");
  c_fuchs->add_option("--file", cert.file, "System JSON")->required();
  c_fuchs->add_option("--k", cert.k, "Level k >= 1");
  auto* c_const = certify->add_subcommand("constcoef", "Constant-coefficient system");
  c_const->add_option("--file", cert.file, "Matrix JSON")->required();
  c_const->add_option("--k", cert.k, "Level k >= 1");
  c_const->add_option("--degree-cap", cert.degree_cap, "Largest monomial degree tested");

  HyperArgs hyp;
  auto* hyper = app.add_subcommand("hyper", "Generalized hypergeometric series")->require_subcommand(1);
  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--alpha", hyp.alpha, "Parameter alpha_j (repeatable)");
    sub->add_option("--beta", hyp.beta, "Parameter beta_j (repeatable)");
    sub->add_option("--file", hyp.file, "Parameter JSON");
  };
  auto* h_series = hyper->add_subcommand("series", "Series coefficients");
  add_params(h_series);
  h_series->add_option("--N", hyp.N, "Last coefficient index");
  auto* h_system = hyper->add_subcommand("system", "Systems, spectral forms, Wronskian");
  add_params(h_system);
  auto* h_lemma11 = hyper->add_subcommand("lemma11", "Adjoint-system certificate");
  add_params(h_lemma11);
  h_lemma11->add_option("--k", hyp.k, "Level k >= 1");
  auto* h_cond = hyper->add_subcommand("conditions", "Irreducibility conditions");
  add_params(h_cond);
  auto* h_thm = hyper->add_subcommand("theorem6", "Irrationality decision at xi");
  add_params(h_thm);
  h_thm->add_option("--xi", hyp.xi, "Rational point xi != 0");
  h_thm->add_option("--epsilon", hyp.epsilon, "0 < epsilon < 1/(m+2)");
  h_thm->add_option("--eta", hyp.eta, "Exponent to compare with eta0");

  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Run the identity and divisibility batteries");
  verify->add_option("--suite", vopts.suite, "identities | divisibility | all");
  verify->add_option("--seed", vopts.seed, "Generator seed");
  verify->add_option("--parallel", vopts.parallel, "Checks run concurrently");
  verify->add_flag("--force-failure", vopts.force_failure, "Append a deliberately failing check");

  for (CLI::App* sub : {c_scalar, c_matrix, c_fuchs, c_const, h_series, h_system, h_lemma11, h_cond, h_thm, verify}) {
    sub->add_flag("--json", common.json, "Machine-readable output");
    sub->add_option("--precision", common.precision, "Working precision in decimal digits (>= 20)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*c_scalar) return cmd_certify_scalar(cert, common);
    if (*c_matrix) return cmd_certify_matrix(cert, common);
    if (*c_fuchs) return cmd_certify_fuchsian(cert, common);
    if (*c_const) return cmd_certify_constcoef(cert, common);
    if (*h_series) return cmd_hyper_series(hyp, common);
    if (*h_system) return cmd_hyper_system(hyp, common);
    if (*h_lemma11) return cmd_hyper_lemma11(hyp, common);
    if (*h_cond) return cmd_hyper_conditions(hyp, common);
    if (*h_thm) return cmd_hyper_theorem6(hyp, common);
    if (*verify) return cmd_verify(vopts, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kInputError;
}
