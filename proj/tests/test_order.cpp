#include "doctest.h"

#include <random>

#include "hassecount/arith.hpp"
#include "hassecount/error.hpp"
#include "hassecount/order.hpp"
#include "hassecount/sweep.hpp"
#include "oracles.hpp"

using namespace hassecount;

TEST_CASE("Hasse interval examples") {
  const auto h49 = hasse_interval(49);
  CHECK(h49.lo == 36);
  CHECK(h49.hi == 64);
  CHECK(h49.trace_bound == 14);
  const auto h2 = hasse_interval(2);
  CHECK(h2.lo == 1);
  CHECK(h2.hi == 5);
  const auto h229 = hasse_interval(229);
  CHECK(h229.lo == 200);
  CHECK(h229.hi == 260);
  for (auto q : prime_powers_up_to(1024)) {
    const auto h = hasse_interval(q);
    REQUIRE(h.lo + h.hi == static_cast<std::int64_t>(2 * (q + 1)));
    REQUIRE(h.trace_bound == static_cast<std::int64_t>(isqrt(4 * q)));
  }
}

TEST_CASE("multiples in the Hasse interval") {
  const auto h49 = hasse_interval(49);
  CHECK(multiples_in_interval(6, h49) == std::vector<std::int64_t>{36, 42, 48, 54, 60});
  CHECK(multiples_in_interval(8, h49) == std::vector<std::int64_t>{40, 48, 56, 64});
  for (std::int64_t m = 1; m < 80; ++m) {
    std::vector<std::int64_t> want;
    for (std::int64_t n = h49.lo; n <= h49.hi; ++n) {
      if (n % m == 0) want.push_back(n);
    }
    REQUIRE(multiples_in_interval(m, h49) == want);
  }
}

TEST_CASE("CRT merge") {
  const auto c = crt_merge(Congruence::make(2, 6), Congruence::make(6, 8));
  CHECK(c == Congruence{14, 24});
  CHECK(oracle::crt_scan(2, 6, 6, 8) == 14);
  CHECK(crt_merge(Congruence::make(0, 1), Congruence::make(3, 5)) == Congruence{3, 5});
  CHECK(Congruence::make(-1, 5) == Congruence{4, 5});
  try {
    crt_merge(Congruence::make(1, 4), Congruence::make(2, 6));
    FAIL("expected incompatible congruence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::incompatible_congruence);
  }
  for (std::int64_t m1 = 1; m1 <= 24; ++m1) {
    for (std::int64_t m2 = 1; m2 <= 24; ++m2) {
      for (std::int64_t a1 = 0; a1 < m1; a1 += 3) {
        for (std::int64_t a2 = 0; a2 < m2; a2 += 2) {
          const auto want = oracle::crt_scan(a1, m1, a2, m2);
          if (want < 0) {
            REQUIRE_THROWS_AS(crt_merge(Congruence::make(a1, m1), Congruence::make(a2, m2)), Error);
            continue;
          }
          const auto got = crt_merge(Congruence::make(a1, m1), Congruence::make(a2, m2));
          REQUIRE(got.m == lcm(m1, m2));
          REQUIRE(got.a == want);
          REQUIRE(mod_floor(got.a - a1, m1) == 0);
          REQUIRE(mod_floor(got.a - a2, m2) == 0);
        }
      }
    }
  }
}

TEST_CASE("trace candidates and uniqueness") {
  CHECK_FALSE(unique_trace_candidate(Congruence::make(14, 24), 49).has_value());
  CHECK(trace_candidates(Congruence::make(14, 24), 49) == std::vector<std::int64_t>{-10, 14});
  CHECK(unique_trace_candidate(Congruence::make(3, 100), 49) == 3);
  CHECK(trace_candidates(Congruence::make(0, 1), 2) == std::vector<std::int64_t>{-2, -1, 0, 1, 2});

  std::mt19937_64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t q = 2 + rng() % 5000;
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 400);
    const std::int64_t a = static_cast<std::int64_t>(rng() % m);
    const auto bound = static_cast<std::int64_t>(isqrt(4 * q));
    const auto want = oracle::scan_class(a, m, bound);
    const auto c = Congruence::make(a, m);
    REQUIRE(trace_candidates(c, q) == want);
    const auto got = unique_trace_candidate(c, q);
    REQUIRE(got.has_value() == (want.size() == 1));
    if (got) REQUIRE(*got == want.front());
  }
}

TEST_CASE("BSGS annihilators") {
  auto f5 = Field::make(5, 1);
  auto e = Curve::from_encodings(f5, {0, 0, 0, 1, 0});
  const Point p = Point::affine(f5->zero(), f5->zero());
  const auto h = hasse_interval(5);
  const auto r = bsgs_search(e, p);
  CHECK(h.contains(r.annihilator));
  CHECK(r.annihilator % 2 == 0);
  CHECK(exact_order(e, p, r.annihilator) == 2);
  CHECK(bsgs_annihilator(e, Point::at_infinity()) == h.lo);

  Rng rng(17);
  for (std::uint64_t q : {1009u, 4096u, 6561u, 65537u, 1000003u}) {
    auto f = Field::from_order(q);
    const auto hq = hasse_interval(q);
    for (const auto& a : random_coefficients(f, 10, q)) {
      const auto c = Curve::make(f, a);
      for (int i = 0; i < 5; ++i) {
        const Point pt = c.random_point(rng);
        const auto m = bsgs_annihilator(c, pt);
        REQUIRE(hq.contains(m));
        REQUIRE(c.multiply(m, pt).infinity);
      }
      // 2-torsion exercises the small-order collision path.
      for (std::uint64_t x = 0; x < 64 && f->characteristic() != 2; ++x) {
        for (const auto& pt : c.points_at(f->element(x))) {
          if (!c.dbl(pt).infinity) continue;
          const auto m = bsgs_annihilator(c, pt);
          REQUIRE(hq.contains(m));
          REQUIRE(point_order(c, pt) == 2);
        }
      }
    }
  }
}

TEST_CASE("exact order examples") {
  auto f5 = Field::make(5, 1);
  auto e = Curve::from_encodings(f5, {0, 0, 0, 1, 0});
  CHECK(exact_order(e, Point::at_infinity(), 7) == 1);
  CHECK(exact_order(e, Point::affine(f5->zero(), f5->zero()), 8) == 2);
  auto f3 = Field::make(3, 1);
  auto e3 = Curve::from_encodings(f3, {0, 0, 0, 2, 0});
  std::int64_t l = 1;
  for (const auto& pt : e3.enumerate_points()) {
    const auto n = point_order(e3, pt);
    CHECK((n == 1 || n == 2));
    l = lcm(l, n);
  }
  CHECK(l == 2);
}

TEST_CASE("exact order matches repeated addition for every point over q <= 49") {
  for (auto q : prime_powers_up_to(49)) {
    CAPTURE(q);
    auto f = Field::from_order(q);
    const auto h = hasse_interval(q);
    for (const auto& a : normal_form_coefficients(f)) {
      const auto e = Curve::make(f, a);
      const auto n_e = static_cast<std::int64_t>(e.count_exhaustive());
      for (const auto& p : e.enumerate_points()) {
        const auto want = oracle::order_by_scan(e, p);
        REQUIRE(exact_order(e, p, n_e) == want);
        const auto m = bsgs_annihilator(e, p);
        REQUIRE(h.contains(m));
        REQUIRE(m % want == 0);
        REQUIRE(point_order(e, p) == want);
      }
    }
  }
}

TEST_CASE("exact order is minimal") {
  Rng rng(5);
  for (std::uint64_t q : {1024u, 2187u, 10007u, 65537u}) {
    auto f = Field::from_order(q);
    for (const auto& a : random_coefficients(f, 20, q)) {
      const auto e = Curve::make(f, a);
      const Point p = e.random_point(rng);
      const auto n = point_order(e, p);
      REQUIRE(e.multiply(n, p).infinity);
      for (auto l : prime_divisors(static_cast<std::uint64_t>(n))) {
        REQUIRE_FALSE(e.multiply(n / static_cast<std::int64_t>(l), p).infinity);
      }
    }
  }
}

TEST_CASE("BSGS cost grows like q^(1/4)") {
  Rng rng(8);
  for (std::uint64_t q : {65537u, 1000003u}) {
    auto f = Field::from_order(q);
    std::uint64_t ops = 0, calls = 0;
    for (const auto& a : random_coefficients(f, 40, q)) {
      const auto e = Curve::make(f, a);
      for (int i = 0; i < 5; ++i) {
        ops += bsgs_search(e, e.random_point(rng)).group_ops;
        ++calls;
      }
    }
    const double mean = static_cast<double>(ops) / static_cast<double>(calls);
    CAPTURE(q);
    CAPTURE(mean);
    CHECK(mean <= 8.0 * std::pow(static_cast<double>(q), 0.25));
  }
}
