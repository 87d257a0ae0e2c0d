#pragma once

// Integer utilities shared by the field, order and exception modules.
// All values in scope fit comfortably in 64 bits: Hasse bounds for
// q < 2^32 stay below 2^33.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hassecount {

std::uint64_t isqrt(std::uint64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

// Returns g = gcd(a, b) and x, y with a*x + b*y = g.
struct ExtendedGcd {
  std::int64_t g, x, y;
};
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

// Floor-style residue in [0, m).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

bool is_prime(std::uint64_t n);

// Prime factors with multiplicity, ascending. Trial division; n in [1, 2^63).
std::vector<std::uint64_t> factorize(std::uint64_t n);

// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned k;
};

// (p, k) with q = p^k, or nullopt when q is not a prime power (q >= 2).
std::optional<PrimePower> as_prime_power(std::uint64_t q);

// Every prime power in [2, limit], ascending. Sieve the primes, then power.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace hassecount
