#include "hassecount/counting.hpp"

#include <algorithm>
#include <string>

namespace hassecount {

namespace {

constexpr std::uint64_t kExhaustiveAutoLimit = 49;
constexpr std::uint64_t kLambdaLimit = std::uint64_t{1} << 16;

CountResult finish(std::uint64_t q, std::uint64_t count, CountMethod method) {
  CountResult r;
  r.count = count;
  r.trace = static_cast<std::int64_t>(q + 1) - static_cast<std::int64_t>(count);
  r.twist_count = 2 * (q + 1) - count;
  r.method = method;
  return r;
}

CountResult count_by_point_orders(const Curve& e, Rng& rng, const CountOptions& options) {
  const std::uint64_t q = e.field().order();
  const auto q1 = static_cast<std::int64_t>(q + 1);
  const Curve twist = e.quadratic_twist();

  CountResult r;
  Congruence c;  // 0 mod 1
  for (unsigned i = 0; i < options.max_samples; ++i) {
    const bool on_twist = (i % 2) == 1;
    const Curve& curve = on_twist ? twist : e;
    const Point p = curve.random_point(rng);
    const std::int64_t order = point_order(curve, p);
    c = crt_merge(c, Congruence::make(on_twist ? -q1 : q1, order));
    r.transcript.push_back({on_twist, order, c});
    if (auto t = unique_trace_candidate(c, q)) {
      const auto count = static_cast<std::uint64_t>(q1 - *t);
      for (unsigned v = 0; v < options.verification_points; ++v) {
        const Point check = e.random_point(rng);
        if (!e.multiply(static_cast<std::int64_t>(count), check).infinity) {
          fail(ErrorCode::internal, "count failed the Lagrange check");
        }
      }
      CountResult out = finish(q, count, CountMethod::point_order);
      out.samples_used = i + 1;
      out.transcript = std::move(r.transcript);
      return out;
    }
  }
  fail(ErrorCode::iteration_cap_exceeded,
       "trace not determined after " + std::to_string(options.max_samples) + " samples");
}

}  // namespace

bool is_excluded_field(std::uint64_t q) {
  return std::find(kExcludedFields.begin(), kExcludedFields.end(), q) != kExcludedFields.end();
}

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::automatic: return "auto";
    case CountMethod::exhaustive: return "exhaustive";
    case CountMethod::point_order: return "point_order";
  }
  return "unknown";
}

std::optional<CountMethod> parse_count_method(std::string_view s) {
  if (s == "auto") return CountMethod::automatic;
  if (s == "exhaustive") return CountMethod::exhaustive;
  if (s == "point_order") return CountMethod::point_order;
  return std::nullopt;
}

CountResult count_points(const Curve& e, CountMethod method, Rng& rng,
                         const CountOptions& options) {
  const std::uint64_t q = e.field().order();
  if (method == CountMethod::automatic) {
    method = (q <= kExhaustiveAutoLimit || is_excluded_field(q)) ? CountMethod::exhaustive
                                                                  : CountMethod::point_order;
  }
  if (method == CountMethod::exhaustive) {
    return finish(q, e.count_exhaustive(), CountMethod::exhaustive);
  }
  if (is_excluded_field(q)) {
    fail(ErrorCode::excluded_field,
         "q = " + std::to_string(q) + " admits ambiguous traces; use exhaustive counting");
  }
  return count_by_point_orders(e, rng, options);
}

CountResult count_points(const Curve& e, CountMethod method, std::uint64_t seed) {
  const std::uint64_t q = e.field().order();
  if (method == CountMethod::exhaustive ||
      (method == CountMethod::automatic && q <= kExhaustiveAutoLimit)) {
    return finish(q, e.count_exhaustive(), CountMethod::exhaustive);
  }
  Rng rng(seed);
  return count_points(e, method, rng);
}

std::int64_t lambda_exponent(const Curve& e) {
  if (e.field().order() > kLambdaLimit) {
    fail(ErrorCode::field_too_large, "group exponent requires q <= 2^16");
  }
  const auto points = e.enumerate_points();
  const auto n = static_cast<std::int64_t>(points.size());
  std::int64_t exponent = 1;
  for (const auto& p : points) {
    if (exponent == n) break;
    exponent = lcm(exponent, exact_order(e, p, n));
  }
  return exponent;
}

GroupStructure group_structure(const Curve& e) {
  const auto n = static_cast<std::int64_t>(e.count_exhaustive());
  const std::int64_t n2 = lambda_exponent(e);
  const auto q = static_cast<std::int64_t>(e.field().order());
  if (n % n2 != 0) fail(ErrorCode::internal, "group exponent does not divide #E");
  const std::int64_t n1 = n / n2;
  if (n2 % n1 != 0 || (q - 1) % n1 != 0) {
    fail(ErrorCode::internal, "group structure violates n1 | n2 and n1 | q-1");
  }
  return {n1, n2};
}

}  // namespace hassecount
