#include "hassecount/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hassecount/error.hpp"

namespace hassecount {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_prime: return "NotPrime";
    case ErrorCode::not_prime_power: return "NotPrimePower";
    case ErrorCode::reducible_polynomial: return "ReduciblePolynomial";
    case ErrorCode::invalid_encoding: return "InvalidEncoding";
    case ErrorCode::spec_mismatch: return "SpecMismatch";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::not_a_square: return "NotASquare";
    case ErrorCode::singular_curve: return "SingularCurve";
    case ErrorCode::point_not_on_curve: return "PointNotOnCurve";
    case ErrorCode::field_too_large: return "FieldTooLarge";
    case ErrorCode::excluded_field: return "ExcludedField";
    case ErrorCode::iteration_cap_exceeded: return "IterationCapExceeded";
    case ErrorCode::incompatible_congruence: return "Incompatible";
    case ErrorCode::internal: return "InternalError";
  }
  return "Unknown";
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::llabs(a / gcd(a, b) * b);
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - quot * r};
    std::tie(old_s, s) = std::pair{s, old_s - quot * s};
    std::tie(old_t, t) = std::pair{t, old_t - quot * t};
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
  if (n == 0 || n >> 63) fail(ErrorCode::internal, "factorize: argument out of range");
  std::vector<std::uint64_t> out;
  while (n % 2 == 0) {
    out.push_back(2);
    n /= 2;
  }
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  auto f = factorize(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.front() != f.back()) return std::nullopt;
  return PrimePower{f.front(), static_cast<unsigned>(f.size())};
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    for (std::uint64_t pk = i;; pk *= i) {
      out.push_back(pk);
      if (pk > limit / i) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace hassecount
