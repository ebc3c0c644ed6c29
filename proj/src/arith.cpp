#include "fcancel/arith.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace fcancel {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::Parse: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DivideByZeroSeries: return "DivideByZeroSeries";
    case Errc::IrrationalSpectrum: return "IrrationalSpectrum";
    case Errc::RepeatedRootMinPoly: return "RepeatedRootMinPoly";
    case Errc::SingularMatrix: return "SingularT";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotCommuting: return "NotCommuting";
    case Errc::InvalidBeta: return "InvalidBeta";
    case Errc::RepeatedBeta: return "RepeatedBeta";
    case Errc::ConditionsFailed: return "ConditionsFailed";
    case Errc::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case Errc::XiZero: return "XiZero";
    case Errc::LimitExceeded: return "LimitExceeded";
  }
  return "Error";
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rat out(num, den);
  out.canonicalize();
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(Errc::Parse, "malformed rational '" + std::string(text) + "'");
  }
  Int num(std::string(num_text), 10);
  Int den(std::string(den_text), 10);
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return make_rat(num, den);
}

std::string to_string(const Rat& x) { return x.get_str(10); }

std::string to_string(const Int& x) { return x.get_str(10); }

Nat denominator(const Rat& x) { return x.get_den(); }

Nat common_denominator(std::span<const Rat> xs) {
  Nat acc = 1;
  for (const Rat& x : xs) absorb_denominator(acc, x);
  return acc;
}

void absorb_denominator(Nat& acc, const Rat& x) {
  const mpz_class& den = x.get_den();
  if (den != 1) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
}

bool divides(const Nat& d, const Nat& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// ---------------------------------------------------------------------------
// Primality

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 result = 1;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Nat& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    return is_prime_u64(static_cast<u64>(mpz_get_ui(n.get_mpz_t())));
  }
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (Nat d = 3; d * d <= n; d += 2) {
    if (divides(d, n)) return false;
  }
  return true;
}

std::vector<unsigned long> primes_upto(unsigned long n) {
  std::vector<unsigned long> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (unsigned long i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

unsigned long prime_count(unsigned long n) { return primes_upto(n).size(); }

std::vector<Nat> prime_divisors(const Nat& b) {
  if (b < 1) throw Error(Errc::InvalidArgument, "prime_divisors needs b >= 1");
  std::vector<Nat> out;
  Nat rest = b;
  for (Nat p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (divides(p, rest)) {
      out.push_back(p);
      while (divides(p, rest)) rest /= p;
    }
  }
  if (rest > 1) out.push_back(rest);
  return out;
}

// ---------------------------------------------------------------------------
// Valuations and products

unsigned long legendre(unsigned long p, unsigned long k) {
  unsigned long total = 0;
  while (k > 0) {
    k /= p;
    total += k;
  }
  return total;
}

unsigned long tau_p(const Nat& p, unsigned long k) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, to_string(p) + " is not prime");
  if (!p.fits_ulong_p()) return 0;  // p > k for every representable k
  return legendre(p.get_ui(), k);
}

unsigned long floor_log(unsigned long p, unsigned long k) {
  unsigned long e = 0;
  unsigned long power = 1;
  while (power <= k / p) {
    power *= p;
    ++e;
  }
  return e;
}

Nat prime_power_product(const Nat& b, unsigned long k) {
  if (b < 1) throw Error(Errc::InvalidArgument, "prime_power_product needs b >= 1");
  Nat out = 1;
  for (const Nat& p : prime_divisors(b)) {
    if (!p.fits_ulong_p()) continue;
    Nat power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), legendre(p.get_ui(), k));
    out *= power;
  }
  return out;
}

Nat factorial(unsigned long n) {
  Nat out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Nat binomial(unsigned long n, unsigned long k) {
  Nat out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Nat lcm_upto(unsigned long k) {
  Nat acc = 1;
  for (unsigned long i = 2; i <= k; ++i) {
    mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
  }
  return acc;
}

Nat g_k(unsigned long k) {
  Nat out = 1;
  std::vector<unsigned long> tau(k + 1);
  for (unsigned long p : primes_upto(k)) {
    for (unsigned long x = 0; x <= k; ++x) tau[x] = legendre(p, x);
    // Each level of the Legendre sum contributes at most 2.
    const unsigned long ceiling = 2 * floor_log(p, k);
    unsigned long best = 0;
    for (unsigned long k0 = 0; 3 * k0 <= k && best < ceiling; ++k0) {
      for (unsigned long k1 = k0; k0 + 2 * k1 <= k; ++k1) {
        const unsigned long k2 = k - k0 - k1;
        const unsigned long v = tau[k] - tau[k0] - tau[k1] - tau[k2];
        if (v > best) best = v;
      }
    }
    Nat power;
    mpz_ui_pow_ui(power.get_mpz_t(), p, best);
    out *= power;
  }
  return out;
}

Nat totient(const Nat& b) {
  if (b < 1) throw Error(Errc::InvalidArgument, "totient needs b >= 1");
  Nat out = b;
  for (const Nat& p : prime_divisors(b)) out = out / p * (p - 1);
  return out;
}

Rat rho_exact(const Nat& b) {
  if (b < 1) throw Error(Errc::InvalidArgument, "rho needs b >= 1");
  Rat sum = 0;
  Nat count = 0;
  for (Nat n = 1; n <= b; ++n) {
    Nat g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), b.get_mpz_t());
    if (g == 1) {
      sum += make_rat(1, n);
      ++count;
    }
  }
  sum.canonicalize();
  Rat out = Rat(b) / Rat(count) * sum;
  out.canonicalize();
  return out;
}

Real rho(const Nat& b, unsigned digits) { return Real(rho_exact(b), digits); }

Real chi(const Nat& b, unsigned digits) {
  Real sum(digits);
  for (const Nat& p : prime_divisors(b)) {
    sum += log(Real(p, digits)) / Real(Nat(p - 1), digits);
  }
  return sum;
}

unsigned long to_ulong(const Nat& n) {
  if (n < 0 || !n.fits_ulong_p()) throw Error(Errc::InvalidArgument, "value does not fit in unsigned long");
  return n.get_ui();
}

}  // namespace fcancel
