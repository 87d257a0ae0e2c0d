#pragma once

// Whole-field curve sweeps used by the acceptance suite, selftest and the
// benchmark. Each kernel has an OpenMP path and a serial reference path that
// must agree exactly.

#include <cstdint>
#include <vector>

#include "hassecount/counting.hpp"
#include "hassecount/curve.hpp"
#include "hassecount/parallel.hpp"

namespace hassecount {

enum class CurveFamily {
  // Every (a1, a2, a3, a4, a6) in F_q^5 with nonzero discriminant.
  all_coefficients,
  // One normal form per characteristic, covering every isomorphism class:
  //   p >= 5: y^2 = x^3 + a4 x + a6
  //   p = 3:  y^2 = x^3 + a2 x^2 + a6 (a2 != 0), y^2 = x^3 + a4 x + a6
  //   p = 2:  y^2 + x y = x^3 + a2 x^2 + a6, y^2 + a3 y = x^3 + a4 x + a6
  normal_forms,
};

std::vector<Coefficients> normal_form_coefficients(const FieldPtr& field);

// n random nonsingular coefficient vectors, reproducible from seed.
std::vector<Coefficients> random_coefficients(const FieldPtr& field, std::size_t n,
                                              std::uint64_t seed);

// Exhaustive point counts of a family, as a histogram over traces:
// hist[t + B] for B = floor(2 sqrt q).
struct TraceHistogram {
  std::int64_t trace_bound = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t curves = 0;
  friend bool operator==(const TraceHistogram&, const TraceHistogram&) = default;
};

TraceHistogram trace_histogram(const FieldPtr& field, CurveFamily family, Execution exec);

struct CountCheck {
  std::uint64_t curves = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t errors = 0;  // exceptions thrown by count_points
  std::uint64_t samples = 0;  // point-order samples consumed
  std::uint64_t max_samples = 0;
  friend bool operator==(const CountCheck&, const CountCheck&) = default;
};

// count_points(E, method, seed) against count_exhaustive for every curve in
// the family.
CountCheck check_counts(const FieldPtr& field, CurveFamily family, CountMethod method,
                        std::uint64_t seed, Execution exec);
CountCheck check_counts(const FieldPtr& field, const std::vector<Coefficients>& curves,
                        CountMethod method, std::uint64_t seed, Execution exec);

}  // namespace hassecount
