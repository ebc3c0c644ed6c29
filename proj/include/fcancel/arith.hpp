#pragma once

// Exact integer/rational arithmetic and the number-theoretic kernels used by
// every certificate: denominators, Legendre valuations, lcm(1..k), the
// trinomial lcm g_k, and the constants chi(b) and rho(b).

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcancel/error.hpp"
#include "fcancel/real.hpp"

namespace fcancel {

using Int = mpz_class;
/// Non-negative arbitrary-precision integer (denominators, bounds).
using Nat = mpz_class;
/// Canonical rational: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);
Rat parse_rat(std::string_view text);
/// "p/q", or "p" when q = 1; a leading '-' for negatives.
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

/// Smallest positive b with b*x integral.
Nat denominator(const Rat& x);
Nat common_denominator(std::span<const Rat> xs);
/// acc <- lcm(acc, den(x)).
void absorb_denominator(Nat& acc, const Rat& x);

bool divides(const Nat& d, const Nat& n);

bool is_prime(const Nat& n);
bool is_prime_u64(std::uint64_t n);
std::vector<unsigned long> primes_upto(unsigned long n);
unsigned long prime_count(unsigned long n);
/// Distinct prime divisors of b >= 1, ascending (trial division).
std::vector<Nat> prime_divisors(const Nat& b);

/// Exponent of the prime p in k! (Legendre); throws NotPrime.
unsigned long tau_p(const Nat& p, unsigned long k);
/// Legendre sum without the primality check.
unsigned long legendre(unsigned long p, unsigned long k);
/// Largest e with p^e <= k (k >= 1, p >= 2).
unsigned long floor_log(unsigned long p, unsigned long k);

/// prod_{p | b} p^{tau_p(k)}; 1 when b = 1.
Nat prime_power_product(const Nat& b, unsigned long k);

Nat factorial(unsigned long n);
Nat binomial(unsigned long n, unsigned long k);
Nat lcm_upto(unsigned long k);
/// lcm of all k!/(k0! k1! k2!) with k0 + k1 + k2 = k.
Nat g_k(unsigned long k);

Nat totient(const Nat& b);
/// (b / phi(b)) * sum_{1 <= n <= b, (n, b) = 1} 1/n, exactly.
Rat rho_exact(const Nat& b);
Real rho(const Nat& b, unsigned digits = kDefaultDigits);
/// sum_{p | b} ln p / (p - 1).
Real chi(const Nat& b, unsigned digits = kDefaultDigits);

unsigned long to_ulong(const Nat& n);

}  // namespace fcancel
