#include "hassecount/order.hpp"

#include <string>
#include <unordered_map>

namespace hassecount {

HasseInterval hasse_interval(std::uint64_t q) {
  if (q < 2) fail(ErrorCode::not_prime_power, "q must be at least 2");
  const auto b = static_cast<std::int64_t>(isqrt(4 * q));
  const auto mid = static_cast<std::int64_t>(q + 1);
  return {q, mid - b, mid + b, b};
}

std::vector<std::int64_t> multiples_in_interval(std::int64_t m, const HasseInterval& h) {
  if (m < 1) fail(ErrorCode::internal, "multiples_in_interval: modulus must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t x = (h.lo + m - 1) / m * m; x <= h.hi; x += m) out.push_back(x);
  return out;
}

Congruence Congruence::make(std::int64_t residue, std::int64_t modulus) {
  if (modulus < 1) fail(ErrorCode::internal, "congruence modulus must be positive");
  return {mod_floor(residue, modulus), modulus};
}

Congruence crt_merge(const Congruence& c1, const Congruence& c2) {
  // x = a1 + m1*k with m1*k = a2 - a1 (mod m2).
  const auto eg = extended_gcd(c1.m, c2.m);
  const std::int64_t diff = c2.a - c1.a;
  if (diff % eg.g != 0) {
    fail(ErrorCode::incompatible_congruence,
         std::to_string(c1.a) + " mod " + std::to_string(c1.m) + " vs " +
             std::to_string(c2.a) + " mod " + std::to_string(c2.m));
  }
  const std::int64_t m2g = c2.m / eg.g;
  const auto k = static_cast<std::int64_t>(
      static_cast<__int128>(mod_floor(diff / eg.g, m2g)) * mod_floor(eg.x, m2g) % m2g);
  const std::int64_t modulus = c1.m * m2g;
  return Congruence::make(c1.a + c1.m * k, modulus);
}

std::vector<std::int64_t> trace_candidates(const Congruence& c, std::uint64_t q) {
  const auto b = static_cast<std::int64_t>(isqrt(4 * q));
  std::vector<std::int64_t> out;
  std::int64_t x = -b + mod_floor(c.a + b, c.m);
  for (; x <= b; x += c.m) out.push_back(x);
  return out;
}

std::optional<std::int64_t> unique_trace_candidate(const Congruence& c, std::uint64_t q) {
  const auto b = static_cast<std::int64_t>(isqrt(4 * q));
  const std::int64_t first = -b + mod_floor(c.a + b, c.m);
  if (first > b || first + c.m <= b) return std::nullopt;
  return first;
}

namespace {

struct BabyEntry {
  std::int64_t j;
  Element y;
};

}  // namespace

BsgsResult bsgs_search(const Curve& e, const Point& p) {
  const HasseInterval h = hasse_interval(e.field().order());
  BsgsResult res;
  if (p.infinity) {
    res.annihilator = h.lo;
    return res;
  }
  const std::int64_t bound = h.trace_bound;
  // Baby steps jP, 0 < j <= s, keyed on x; t = i*w + j with |j| <= s.
  const std::int64_t s = std::max<std::int64_t>(1, static_cast<std::int64_t>(isqrt(bound)));
  const std::int64_t w = 2 * s + 1;

  std::unordered_map<std::uint32_t, BabyEntry> baby;
  baby.reserve(static_cast<std::size_t>(2 * s));
  Point cur = p;
  std::optional<std::int64_t> small;  // a small annihilator, if one shows up
  for (std::int64_t j = 1; j <= s; ++j) {
    if (j > 1) {
      cur = e.add(cur, p);
      ++res.group_ops;
    }
    if (cur.infinity) {
      small = j;
      break;
    }
    auto [it, inserted] = baby.try_emplace(cur.x.enc, BabyEntry{j, cur.y});
    if (!inserted) {
      // jP = +-j'P
      small = it->second.y == cur.y ? j - it->second.j : j + it->second.j;
      break;
    }
  }

  if (small) {
    const std::int64_t n = exact_order(e, p, *small, &res.group_ops);
    res.annihilator = (h.lo + n - 1) / n * n;
    if (res.annihilator > h.hi) fail(ErrorCode::internal, "point order has no multiple in H_q");
    return res;
  }

  // Giant steps Q_i = (q+1)P - i*w*P, i = 0, 1, -1, 2, -2, ...
  const Point base = e.multiply(h.lo + bound, p, &res.group_ops);
  const Point stride = e.multiply(w, p, &res.group_ops);
  const Point neg_stride = e.negate(stride);
  Point up = base, down = base;
  const std::int64_t imax = (bound + s) / w + 1;

  auto probe = [&](const Point& q, std::int64_t i) -> std::optional<std::int64_t> {
    const std::int64_t mid = h.lo + bound - i * w;
    if (q.infinity) {
      if (h.contains(mid)) return mid;
      return std::nullopt;
    }
    auto it = baby.find(q.x.enc);
    if (it == baby.end()) return std::nullopt;
    const std::int64_t m = it->second.y == q.y ? mid - it->second.j : mid + it->second.j;
    if (h.contains(m)) return m;
    return std::nullopt;
  };

  for (std::int64_t i = 0; i <= imax; ++i) {
    if (i > 0) {
      up = e.add(up, neg_stride);
      down = e.add(down, stride);
      res.group_ops += 2;
    }
    if (auto m = probe(up, i)) {
      res.annihilator = *m;
      return res;
    }
    if (i > 0) {
      if (auto m = probe(down, -i)) {
        res.annihilator = *m;
        return res;
      }
    }
  }
  fail(ErrorCode::internal, "baby-step giant-step found no annihilator in H_q");
}

std::int64_t exact_order(const Curve& e, const Point& p, std::int64_t annihilator,
                         std::uint64_t* ops) {
  if (annihilator < 1) fail(ErrorCode::internal, "annihilator must be positive");
  if (p.infinity) return 1;
  std::int64_t n = annihilator;
  for (auto l64 : prime_divisors(static_cast<std::uint64_t>(annihilator))) {
    const auto l = static_cast<std::int64_t>(l64);
    while (n % l == 0 && e.multiply(n / l, p, ops).infinity) n /= l;
  }
  return n;
}

std::int64_t point_order(const Curve& e, const Point& p, std::uint64_t* ops) {
  auto r = bsgs_search(e, p);
  if (ops) *ops += r.group_ops;
  return exact_order(e, p, r.annihilator, ops);
}

}  // namespace hassecount
