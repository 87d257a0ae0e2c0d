#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hassecount {

enum class ErrorCode {
  not_prime,
  not_prime_power,
  reducible_polynomial,
  invalid_encoding,
  spec_mismatch,
  division_by_zero,
  not_a_square,
  singular_curve,
  point_not_on_curve,
  field_too_large,
  excluded_field,
  iteration_cap_exceeded,
  incompatible_congruence,
  internal,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hassecount
