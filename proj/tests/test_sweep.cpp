#include "doctest.h"

#include <set>

#include "hassecount/arith.hpp"
#include "hassecount/counting.hpp"
#include "hassecount/parallel.hpp"
#include "hassecount/sweep.hpp"

using namespace hassecount;

TEST_CASE("normal forms realize the same traces as the full coefficient space") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    auto f = Field::from_order(q);
    const auto all = trace_histogram(f, CurveFamily::all_coefficients, Execution::serial);
    const auto nf = trace_histogram(f, CurveFamily::normal_forms, Execution::serial);
    REQUIRE(all.counts.size() == nf.counts.size());
    for (std::size_t i = 0; i < all.counts.size(); ++i) {
      REQUIRE((all.counts[i] > 0) == (nf.counts[i] > 0));
    }
    // Nonsingular count of the full space: q^5 - q^4.
    CHECK(all.curves == q * q * q * q * q - q * q * q * q);
  }
}

TEST_CASE("random coefficients are reproducible and nonsingular") {
  auto f = Field::from_order(243);
  const auto a = random_coefficients(f, 100, 5);
  CHECK(a == random_coefficients(f, 100, 5));
  CHECK(a != random_coefficients(f, 100, 6));
  for (const auto& c : a) CHECK(Curve::try_make(f, c).has_value());
}

TEST_CASE("serial and parallel kernels agree") {
  for (int workers : {1, 2, 3}) {
    set_worker_count(workers);
    for (std::uint64_t q : {8u, 13u, 27u, 64u}) {
      auto f = Field::from_order(q);
      CHECK(trace_histogram(f, CurveFamily::normal_forms, Execution::serial) ==
            trace_histogram(f, CurveFamily::normal_forms, Execution::parallel));
    }
    auto f = Field::from_order(11);
    CHECK(trace_histogram(f, CurveFamily::all_coefficients, Execution::serial) ==
          trace_histogram(f, CurveFamily::all_coefficients, Execution::parallel));
    auto g = Field::from_order(101);
    const auto s = check_counts(g, CurveFamily::normal_forms, CountMethod::point_order, 3, Execution::serial);
    const auto p = check_counts(g, CurveFamily::normal_forms, CountMethod::point_order, 3, Execution::parallel);
    CHECK(s == p);
    CHECK(s.mismatches == 0);
    CHECK(s.errors == 0);
  }
  set_worker_count(0);
}

TEST_CASE("count checks report errors instead of throwing") {
  auto f = Field::from_order(7);
  const auto c = check_counts(f, random_coefficients(f, 10, 1), CountMethod::point_order, 0,
                              Execution::serial);
  CHECK(c.curves == 10);
  CHECK(c.errors == 10);  // 7 is an excluded field
}
