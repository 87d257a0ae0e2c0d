#pragma once

// Point orders via baby-step giant-step search over the Hasse interval, and
// the congruence bookkeeping on the trace of Frobenius.

#include <cstdint>
#include <optional>
#include <vector>

#include "hassecount/arith.hpp"
#include "hassecount/curve.hpp"

namespace hassecount {

// [q+1-B, q+1+B] with B = floor(2 sqrt q) = isqrt(4q); integer-exact.
struct HasseInterval {
  std::uint64_t q = 0;
  std::int64_t lo = 0, hi = 0;
  std::int64_t trace_bound = 0;

  bool contains(std::int64_t n) const { return lo <= n && n <= hi; }
};

HasseInterval hasse_interval(std::uint64_t q);

// Multiples of m in [lo, hi], ascending.
std::vector<std::int64_t> multiples_in_interval(std::int64_t m, const HasseInterval& h);

// The set {x : x = a mod m}, 0 <= a < m.
struct Congruence {
  std::int64_t a = 0;
  std::int64_t m = 1;

  static Congruence make(std::int64_t residue, std::int64_t modulus);
  bool holds(std::int64_t x) const { return mod_floor(x - a, m) == 0; }
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

// Conjunction of two congruences, modulus lcm(m1, m2), via extended Euclid.
// Throws Incompatible when gcd(m1, m2) does not divide a1 - a2.
Congruence crt_merge(const Congruence& c1, const Congruence& c2);

// All x in the class with |x| <= floor(2 sqrt q), ascending.
std::vector<std::int64_t> trace_candidates(const Congruence& c, std::uint64_t q);
std::optional<std::int64_t> unique_trace_candidate(const Congruence& c, std::uint64_t q);

struct BsgsResult {
  std::int64_t annihilator = 0;  // in the Hasse interval, kills P
  std::uint64_t group_ops = 0;   // additions and doublings performed
};

// Finds some m in H_q with mP = O using O(q^(1/4)) group operations.
BsgsResult bsgs_search(const Curve& e, const Point& p);
inline std::int64_t bsgs_annihilator(const Curve& e, const Point& p) {
  return bsgs_search(e, p).annihilator;
}

// Minimal n > 0 with nP = O, given any positive multiple of it.
std::int64_t exact_order(const Curve& e, const Point& p, std::int64_t annihilator,
                         std::uint64_t* ops = nullptr);

// exact_order(bsgs_annihilator(P)).
std::int64_t point_order(const Curve& e, const Point& p, std::uint64_t* ops = nullptr);

}  // namespace hassecount
