#include "fcancel/falling.hpp"

namespace fcancel {

Rat falling(const Rat& lambda, unsigned long n) {
  Rat acc = 1;
  for (unsigned long i = 0; i < n; ++i) acc *= lambda - i;
  return acc;
}

Rat delta(const Rat& lambda, unsigned long n) {
  Rat out = falling(lambda, n) / Rat(factorial(n));
  out.canonicalize();
  return out;
}

FallingTable falling_table(const Rat& lambda, unsigned long k) {
  FallingTable table{lambda, {}};
  table.values.reserve(k + 1);
  table.values.emplace_back(1);
  for (unsigned long n = 1; n <= k; ++n) {
    Rat next = table.values.back() * (lambda - (n - 1)) / n;
    table.values.push_back(next);
  }
  return table;
}

UniPoly delta_poly_coeffs(unsigned long n) {
  UniPoly acc = UniPoly::constant(1);
  for (unsigned long i = 0; i < n; ++i) acc = acc * UniPoly::linear(Rat(i));
  return acc * make_rat(1, factorial(n));
}

std::vector<Rat> delta_derivatives(const Rat& lambda, unsigned long n, unsigned r) {
  if (r == 0) throw Error(Errc::InvalidArgument, "delta_derivatives needs r >= 1");
  // Horner evaluation of the expanded Delta_n at lambda + t, truncated mod t^r.
  const UniPoly f = delta_poly_coeffs(n);
  std::vector<Rat> out(r);
  for (long i = static_cast<long>(f.degree()); i >= 0; --i) {
    for (unsigned j = r - 1; j > 0; --j) out[j] = out[j] * lambda + out[j - 1];
    out[0] = out[0] * lambda + f.coeff(static_cast<unsigned long>(i));
  }
  return out;
}

Nat scalar_bound(const Nat& b, unsigned long k, unsigned r) {
  Nat out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), k);
  Nat dk = lcm_upto(k);
  Nat dk_pow;
  mpz_pow_ui(dk_pow.get_mpz_t(), dk.get_mpz_t(), r - 1);
  return out * dk_pow * prime_power_product(b, k);
}

namespace {

// Delta_n(lambda + t) mod t^r is built from Delta_{n-1}(lambda + t) by one
// multiplication with ((lambda - n + 1) + t) / n.
std::vector<CancellationCertificate> run_scalar(const Rat& lambda, unsigned long k_max, unsigned r,
                                                unsigned digits, bool keep_all) {
  if (k_max < 1) throw Error(Errc::InvalidArgument, "k must be at least 1");
  if (r < 1) throw Error(Errc::InvalidArgument, "r must be at least 1");
  const Nat b = denominator(lambda);
  const Real asym = Real(b, digits) * exp(chi(b, digits) + Real(static_cast<long>(r) - 1, digits));

  std::vector<Rat> c(r);
  c[0] = 1;
  Nat psi = 1;
  std::vector<CancellationCertificate> out;
  for (unsigned long n = 1; n <= k_max; ++n) {
    const Rat shift = lambda - (n - 1);
    for (unsigned j = r; j-- > 0;) {
      Rat next = shift * c[j];
      if (j > 0) next += c[j - 1];
      next /= n;
      c[j] = std::move(next);
    }
    for (const Rat& x : c) absorb_denominator(psi, x);
    if (keep_all || n == k_max) {
      CancellationCertificate cert;
      cert.k = n;
      cert.psi_k = psi;
      cert.bound_k = scalar_bound(b, n, r);
      cert.asymptotic_constant = ReportedReal::from(asym);
      finalize(cert, digits);
      out.push_back(std::move(cert));
    }
  }
  return out;
}

}  // namespace

CancellationCertificate certify_scalar(const Rat& lambda, unsigned long k, unsigned r, unsigned digits) {
  return run_scalar(lambda, k, r, digits, false).back();
}

std::vector<CancellationCertificate> certify_scalar_upto(const Rat& lambda, unsigned long k_max, unsigned r,
                                                         unsigned digits) {
  return run_scalar(lambda, k_max, r, digits, true);
}

}  // namespace fcancel
