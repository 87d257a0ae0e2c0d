#include "doctest.h"

#include "hassecount/arith.hpp"
#include "hassecount/counting.hpp"
#include "hassecount/error.hpp"
#include "hassecount/exceptions.hpp"
#include "hassecount/sweep.hpp"
#include "oracles.hpp"

using namespace hassecount;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

std::vector<Coefficients> thinned(std::vector<Coefficients> v, std::size_t limit) {
  if (v.size() <= limit) return v;
  const std::size_t stride = (v.size() + limit - 1) / limit;
  std::vector<Coefficients> out;
  for (std::size_t i = 0; i < v.size(); i += stride) out.push_back(v[i]);
  return out;
}

Curve table_curve(std::uint64_t q) {
  for (const auto& row : table1_rows()) {
    if (row.q == q) return table1_curve(row);
  }
  FAIL("no such row");
  throw;
}

}  // namespace

TEST_CASE("counting examples") {
  auto f7 = Field::make(7, 1);
  const auto r7 = count_points(Curve::from_encodings(f7, {0, 0, 0, 0, 6}), CountMethod::exhaustive);
  CHECK(r7.count == 4);
  CHECK(r7.trace == 4);
  CHECK(r7.twist_count == 12);

  const auto e49 = table_curve(49);
  const auto r49 = count_points(e49);
  CHECK(r49.count == 36);
  CHECK(r49.trace == 14);
  CHECK(r49.method == CountMethod::exhaustive);

  // The same curve built from the default model of F_49 and its own
  // primitive element.
  const auto e49d = table1_curve(table1_rows().back(), AlphaConvention::default_field);
  CHECK(e49d.count_exhaustive() == 36);

  auto f1013 = Field::make(1013, 1);
  for (const auto& a : random_coefficients(f1013, 50, 1)) {
    const auto e = Curve::make(f1013, a);
    const auto r = count_points(e, CountMethod::point_order, 1);
    REQUIRE(r.count == e.count_exhaustive());
    REQUIRE(r.method == CountMethod::point_order);
    REQUIRE(r.samples_used >= 1);
    REQUIRE(r.transcript.size() == r.samples_used);
  }
}

TEST_CASE("method names") {
  for (auto m : {CountMethod::automatic, CountMethod::exhaustive, CountMethod::point_order}) {
    CHECK(parse_count_method(to_string(m)) == m);
  }
  CHECK_FALSE(parse_count_method("fast"));
}

TEST_CASE("excluded fields") {
  for (auto q : kExcludedFields) {
    CAPTURE(q);
    auto f = Field::from_order(q);
    const auto a = random_coefficients(f, 1, q).front();
    const auto e = Curve::make(f, a);
    CHECK(code_of([&] { count_points(e, CountMethod::point_order, 0); }) ==
          ErrorCode::excluded_field);
    CHECK(count_points(e, CountMethod::automatic, 0).method == CountMethod::exhaustive);
  }
  CHECK_FALSE(is_excluded_field(229));
  CHECK_FALSE(is_excluded_field(2));
  // Non-excluded small fields can be forced onto the point-order path.
  auto f13 = Field::make(13, 1);
  const auto e13 = Curve::from_encodings(f13, {0, 0, 0, 1, 1});
  CHECK(count_points(e13, CountMethod::point_order, 0).count == e13.count_exhaustive());
}

TEST_CASE("excluded fields are counted correctly by auto") {
  for (auto q : kExcludedFields) {
    auto f = Field::from_order(q);
    for (const auto& a : normal_form_coefficients(f)) {
      const auto e = Curve::make(f, a);
      const auto r = count_points(e, CountMethod::automatic, 0);
      if (f->degree() == 1) {
        std::array<std::int64_t, 5> ai;
        for (std::size_t i = 0; i < 5; ++i) ai[i] = a[i].enc;
        REQUIRE(r.count == oracle::count_prime_field_pairs(static_cast<std::int64_t>(q), ai));
      } else {
        REQUIRE(r.count == oracle::count_pairs(e));
      }
    }
  }
}

TEST_CASE("iteration cap") {
  auto f = Field::make(1009, 1);
  CountOptions opts;
  opts.max_samples = 1;
  bool saw_cap = false;
  for (const auto& a : random_coefficients(f, 200, 3)) {
    const auto e = Curve::make(f, a);
    Rng rng(0);
    try {
      const auto r = count_points(e, CountMethod::point_order, rng, opts);
      REQUIRE(r.count == e.count_exhaustive());
    } catch (const Error& err) {
      REQUIRE(err.code() == ErrorCode::iteration_cap_exceeded);
      saw_cap = true;
    }
  }
  CHECK(saw_cap);
}

TEST_CASE("transcripts are reproducible and consistent") {
  auto f = Field::from_order(3125);
  for (const auto& a : random_coefficients(f, 30, 8)) {
    const auto e = Curve::make(f, a);
    const auto r1 = count_points(e, CountMethod::point_order, 77);
    const auto r2 = count_points(e, CountMethod::point_order, 77);
    REQUIRE(r1.count == r2.count);
    REQUIRE(r1.transcript.size() == r2.transcript.size());
    for (std::size_t i = 0; i < r1.transcript.size(); ++i) {
      const auto& s = r1.transcript[i];
      REQUIRE(s.on_twist == r2.transcript[i].on_twist);
      REQUIRE(s.order == r2.transcript[i].order);
      REQUIRE(s.constraint == r2.transcript[i].constraint);
      REQUIRE(s.on_twist == (i % 2 == 1));
      // Each constraint holds at the true trace.
      REQUIRE(s.constraint.holds(r1.trace));
    }
  }
}

TEST_CASE("point-order counting agrees with enumeration") {
  // Normal forms for every non-excluded q <= 256, random curves above.
  for (auto q : prime_powers_up_to(1024)) {
    if (is_excluded_field(q)) continue;
    CAPTURE(q);
    auto f = Field::from_order(q);
    const auto curves = q <= 256 ? thinned(normal_form_coefficients(f), 20000)
                                 : random_coefficients(f, 50, q);
    const auto check = check_counts(f, curves, CountMethod::point_order, 0, Execution::parallel);
    REQUIRE(check.curves == curves.size());
    REQUIRE(check.errors == 0);
    REQUIRE(check.mismatches == 0);
  }
}

TEST_CASE("twist negates the trace") {
  for (std::uint64_t q : {53u, 64u, 81u, 256u, 343u, 1021u}) {
    auto f = Field::from_order(q);
    for (const auto& a : random_coefficients(f, 20, q)) {
      const auto e = Curve::make(f, a);
      const auto r = count_points(e, CountMethod::point_order, 0);
      const auto rt = count_points(e.quadratic_twist(), CountMethod::point_order, 0);
      REQUIRE(rt.trace == -r.trace);
      REQUIRE(rt.count == r.twist_count);
      REQUIRE(hasse_interval(q).contains(static_cast<std::int64_t>(r.count)));
    }
  }
}

TEST_CASE("group exponent examples") {
  auto f3 = Field::make(3, 1);
  const auto e3 = Curve::from_encodings(f3, {0, 0, 0, 2, 0});
  CHECK(lambda_exponent(e3) == 2);
  CHECK(group_structure(e3) == GroupStructure{2, 2});

  const auto e4 = table_curve(4);
  CHECK(lambda_exponent(e4) == 1);
  CHECK(group_structure(e4) == GroupStructure{1, 1});
  CHECK(group_structure(e4.quadratic_twist()) == GroupStructure{3, 3});

  const auto e49 = table_curve(49);
  CHECK(lambda_exponent(e49) == 6);
  CHECK(lambda_exponent(e49.quadratic_twist()) == 8);

  // A cyclic group: y^2 = x^3 + x + 1 over F_5 has 9 points and a point of
  // order 9.
  auto f5 = Field::make(5, 1);
  const auto c = Curve::from_encodings(f5, {0, 0, 0, 1, 1});
  CHECK(c.count_exhaustive() == 9);
  CHECK(group_structure(c) == GroupStructure{1, 9});

  std::uint64_t p = (1u << 16) + 1;
  auto big = Field::make(p, 1);
  CHECK(code_of([&] { lambda_exponent(Curve::from_encodings(big, {0, 0, 0, 1, 1})); }) ==
        ErrorCode::field_too_large);
}

TEST_CASE("group exponent matches orders found by repeated addition") {
  for (auto q : prime_powers_up_to(32)) {
    auto f = Field::from_order(q);
    for (const auto& a : normal_form_coefficients(f)) {
      const auto e = Curve::make(f, a);
      std::int64_t l = 1;
      for (const auto& pt : e.enumerate_points()) l = lcm(l, oracle::order_by_scan(e, pt));
      REQUIRE(lambda_exponent(e) == l);
    }
  }
}

TEST_CASE("group structure invariants for every q <= 121") {
  for (auto q : prime_powers_up_to(121)) {
    CAPTURE(q);
    auto f = Field::from_order(q);
    for (const auto& a : thinned(normal_form_coefficients(f), 4000)) {
      const auto e = Curve::make(f, a);
      const auto n = static_cast<std::int64_t>(e.count_exhaustive());
      const auto n2 = lambda_exponent(e);
      REQUIRE(n % n2 == 0);
      const auto n1 = n / n2;
      REQUIRE(n2 % n1 == 0);
      REQUIRE(static_cast<std::int64_t>(q - 1) % n1 == 0);
      REQUIRE(group_structure(e) == GroupStructure{n1, n2});
    }
  }
}
