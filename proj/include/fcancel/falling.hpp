#pragma once

// Falling factorials <lambda>_n, the binomial polynomials Delta_n = <x>_n / n!,
// and their denominator certificates.

#include <vector>

#include "fcancel/arith.hpp"
#include "fcancel/certificate.hpp"
#include "fcancel/poly.hpp"

namespace fcancel {

struct FallingTable {
  Rat lambda;
  /// values[n] = Delta_n(lambda), n = 0..k
  std::vector<Rat> values;
};

Rat falling(const Rat& lambda, unsigned long n);
Rat delta(const Rat& lambda, unsigned long n);
FallingTable falling_table(const Rat& lambda, unsigned long k);

/// Delta_n(x) expanded in powers of x.
UniPoly delta_poly_coeffs(unsigned long n);

/// Delta_n^{(j)}(lambda) / j! for j = 0..r-1 (Taylor shift of delta_poly_coeffs).
std::vector<Rat> delta_derivatives(const Rat& lambda, unsigned long n, unsigned r);

/// b^k d_k^{r-1} prod_{p | b} p^{tau_p(k)}
Nat scalar_bound(const Nat& b, unsigned long k, unsigned r);

CancellationCertificate certify_scalar(const Rat& lambda, unsigned long k, unsigned r,
                                       unsigned digits = kDefaultDigits);

/// Certificates for k = 1..k_max from one incremental pass.
std::vector<CancellationCertificate> certify_scalar_upto(const Rat& lambda, unsigned long k_max, unsigned r,
                                                         unsigned digits = kDefaultDigits);

}  // namespace fcancel
