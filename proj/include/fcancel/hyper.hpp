#pragma once

// Generalized hypergeometric series with rational parameters, the associated
// Fuchsian system at {0, 1} and its adjoint, the spectral closed forms of the
// adjoint residues, denominator certificates, the irreducibility conditions
// and the irrationality decision for values at rational points.

#include <optional>
#include <string>
#include <vector>

#include "fcancel/certificate.hpp"
#include "fcancel/fuchs.hpp"
#include "fcancel/matrix.hpp"
#include "fcancel/series.hpp"

namespace fcancel {

struct HyperParams {
  unsigned m = 0;
  std::vector<Rat> alpha;
  std::vector<Rat> beta;

  /// Throws InvalidArgument on length mismatch, InvalidBeta if some beta is a negative integer.
  static HyperParams make(std::vector<Rat> alpha, std::vector<Rat> beta);
};

/// sum_n prod_j <-alpha_j>_n / <-beta_j - 1>_n z^n through z^N.
SeriesQ series(const HyperParams& p, unsigned N);

/// e[l] = coefficient of z^{n-l} in prod (z + x_i); e[0] = 1.
std::vector<Rat> elementary_symmetric(const std::vector<Rat>& xs);

struct Vieta {
  /// Index l holds sigma_l, l = 0..m.
  std::vector<Rat> sigma_alpha;
  std::vector<Rat> sigma_beta;
};
Vieta vieta(const HyperParams& p);

/// Augmented system at poles 0 and 1. Index 0 is the constant component.
FuchsianSystem build_system(const HyperParams& p);
/// Homogeneous adjoint system: residues A1 at 0 and A2 at 1.
FuchsianSystem adjoint_fuchsian(const HyperParams& p);

struct SpectralForms {
  std::vector<Rat> sigma_alpha;
  std::vector<Rat> sigma_beta;
  Rat gamma;
  MatQ A1;
  MatQ A2;
  /// Columns are the eigenvectors of A1 for beta_1..beta_m.
  MatQ T;
  MatQ T_inv;
  std::vector<Rat> a;
  MatQ B1;
  MatQ B2;
};
/// Throws RepeatedBeta when two betas coincide.
SpectralForms adjoint_system(const HyperParams& p);

/// B2^2 = gamma B2 and <B2>_n2 = <gamma - 1>_{n2 - 1} B2.
bool projector_relations(const SpectralForms& f, unsigned n2);

struct Lemma11Report {
  Nat a = 1;
  Nat b = 1;
  bool gamma_zero = false;
  /// lcm of denominators of gamma <B1,B2>_{n1,n2} / (n1+n2)! (no gamma when it vanishes), n1+n2 <= k.
  Nat inner_psi = 1;
  Nat inner_bound = 1;
  bool inner_divides = false;
  /// psi_k of the adjoint system against t1 t2 |num gamma| * inner_bound.
  CancellationCertificate outer;
};
/// Throws RepeatedBeta.
Lemma11Report certify_lemma11(const HyperParams& p, unsigned long k, unsigned digits = kDefaultDigits);

/// g_k a b^k prod_{p|b} p^{tau_p(k)}, with the extra d_k when gamma = 0.
Nat lemma11_inner_bound(const Nat& a, const Nat& b, bool gamma_zero, unsigned long k);

/// 1/(z^{n1+1}(1-z)^{n2+1}) against its two-sided partial fraction expansion.
bool partial_fraction_identity(unsigned n1, unsigned n2);

struct GClassEstimate {
  Nat q1 = 1;
  Nat q2 = 1;
  Nat b = 1;
  std::vector<Nat> b_js;
  /// ln Phi = sum rho(b_j) + ln q1 - ln b; sum rho(b_j) is rational.
  Rat rho_sum;
  ReportedReal Phi;
};
GClassEstimate g_class_phi(const HyperParams& p, unsigned digits = kDefaultDigits);

/// lcm of denominators of the series coefficients f_0..f_k.
Nat series_denominator(const HyperParams& p, unsigned long k);
/// prod_j den(alpha_j)^k prod_{p | den alpha_j} p^{tau_p(k)} lcm_{1<=i<=k} |num beta_j + den beta_j i|.
Nat series_denominator_bound(const HyperParams& p, unsigned long k);

struct WronskianReport {
  Rat sigma1_alpha;
  Rat sigma1_beta;
  bool trace_matches = false;
  /// Exponents with z^{e0} (1-z)^{e1} solving the trace equation.
  Rat e0;
  Rat e1;
  Rat printed_e0;
  Rat printed_e1;
  bool derived_solves = false;
  bool printed_solves = false;
};
WronskianReport wronskian_checks(const HyperParams& p);

/// (x_1..x_m) ~ (y_1..y_m): some permutation makes every difference an integer.
bool equivalent_mod_integers(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

struct ConditionsReport {
  bool linear = false;
  bool belyi = false;
  bool kummer = false;
  bool two_gamma = false;
  /// One line per violated condition.
  std::vector<std::string> diagnostics;

  bool all() const { return linear && belyi && kummer && two_gamma; }
};
ConditionsReport check_conditions(const HyperParams& p);

struct Theorem6Report {
  ConditionsReport conditions;
  Nat b0 = 1;
  Rat H;
  ReportedReal Phi;
  ReportedReal C0;
  ReportedReal log_C0;
  /// Reported only when the denominator of eta0 does not straddle zero.
  std::optional<ReportedReal> eta0;
  Rat xi;
  Rat epsilon;
  /// (1-(m+2)eps) ln a2 - ln C0 - (2-(m+1)eps) ln|a1|, as an enclosure.
  ReportedReal margin_lo;
  ReportedReal margin_hi;
  /// False when the enclosure of the margin contains zero.
  bool decided = false;
  bool irrational = false;
  std::optional<ReportedReal> measure_exponent;
  /// eta > eta0, when eta was supplied.
  std::optional<bool> eta_admissible;
};
/// Throws ConditionsFailed, RepeatedBeta, EpsilonOutOfRange, XiZero.
Theorem6Report theorem6(const HyperParams& p, const Rat& xi, const Rat& epsilon, const std::optional<Real>& eta,
                        unsigned digits = kDefaultDigits);

}  // namespace fcancel
