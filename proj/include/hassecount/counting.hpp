#pragma once

// #E(F_q) by the point-order Las Vegas method: collect t = q+1 (mod |P|)
// for points on E and t = -(q+1) (mod |P'|) for points on the twist until
// a single trace remains in the Hasse range. Small fields are enumerated.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hassecount/curve.hpp"
#include "hassecount/order.hpp"

namespace hassecount {

// Prime powers for which the trace can stay ambiguous however many point
// orders on E and E' are known.
inline constexpr std::array<std::uint64_t, 12> kExcludedFields = {3,  4,  5,  7,  9,  11,
                                                                  16, 17, 23, 25, 29, 49};

bool is_excluded_field(std::uint64_t q);

enum class CountMethod { automatic, exhaustive, point_order };

std::string_view to_string(CountMethod m);
std::optional<CountMethod> parse_count_method(std::string_view s);

struct Sample {
  bool on_twist = false;
  std::int64_t order = 0;
  Congruence constraint;  // after merging this sample
};

struct CountResult {
  std::uint64_t count = 0;
  std::int64_t trace = 0;
  std::uint64_t twist_count = 0;
  CountMethod method = CountMethod::exhaustive;
  unsigned samples_used = 0;
  std::vector<Sample> transcript;
};

struct CountOptions {
  unsigned max_samples = 64;
  unsigned verification_points = 3;
};

// automatic enumerates when q <= 49 and runs the point-order loop otherwise.
// Throws ExcludedField if point_order is forced on an excluded q, and
// IterationCapExceeded if the loop does not settle within max_samples.
CountResult count_points(const Curve& e, CountMethod method, Rng& rng,
                         const CountOptions& options = {});
CountResult count_points(const Curve& e, CountMethod method = CountMethod::automatic,
                         std::uint64_t seed = 0);

// lcm of the orders of all points; q <= 2^16.
std::int64_t lambda_exponent(const Curve& e);

// E(F_q) = Z/n1 x Z/n2 with n1 | n2, n1 | q-1, n2 = lambda(E).
struct GroupStructure {
  std::int64_t n1 = 1;
  std::int64_t n2 = 1;
  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

GroupStructure group_structure(const Curve& e);

}  // namespace hassecount
