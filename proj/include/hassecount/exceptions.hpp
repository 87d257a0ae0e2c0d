#pragma once

// Enumeration of the (M, N, t, t') quadruples for which the trace is not
// pinned down by M = lambda(E) and N = lambda(E'):
//   (i)   M | q+1-t,  N | q+1+t,  0 <= t <= 2 sqrt q
//   (ii)  m = (q+1-t)/M divides M and q-1;  n = (q+1+t)/N divides N and q-1
//   (iii) M | q+1-t', N | q+1+t' for some t' != t with |t'| <= 2 sqrt q
// with M, N ranging over [sqrt(q) - 1, 4 sqrt(q)].

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hassecount/curve.hpp"
#include "hassecount/parallel.hpp"

namespace hassecount {

struct ExceptionRecord {
  std::uint64_t q = 0;
  std::int64_t M = 0, N = 0;
  std::int64_t t = 0, t_prime = 0;
  std::int64_t m = 0, n = 0;  // (q+1-t)/M, (q+1+t)/N

  friend auto operator<=>(const ExceptionRecord&, const ExceptionRecord&) = default;
};

enum class ExceptionRule {
  // Conditions (i)-(iii): the exponents alone leave t ambiguous.
  exponents,
  // Also require (q+1-t')/M | M and (q+1+t')/N | N, i.e. the ambiguous t'
  // must itself admit groups with exponents M and N.
  groups,
  // As groups, additionally requiring both t'-cofactors to divide q-1.
  groups_with_q_minus_1,
  // Only require both t'-cofactors to divide q-1.
  q_minus_1_only,
};

// Integer loop bounds for M and N: [max(1, ceil(sqrt q) - 1), floor(4 sqrt q)].
struct ExponentRange {
  std::int64_t lo, hi;
};
ExponentRange exponent_range(std::uint64_t q);

// Records for one prime power q, sorted by (M, N, t, t'). Throws NotPrimePower.
std::vector<ExceptionRecord> enumerate_exceptions(std::uint64_t q,
                                                  ExceptionRule rule = ExceptionRule::exponents);
// Uses groups_with_q_minus_1.
std::vector<ExceptionRecord> enumerate_exceptions_corollary(std::uint64_t q);

// Records for every prime power q <= q_max, sorted by q then as above.
std::vector<ExceptionRecord> sweep_exceptions(std::uint64_t q_max, ExceptionRule rule,
                                              Execution exec = Execution::parallel);

// Distinct q appearing in sweep_exceptions.
std::vector<std::uint64_t> exceptional_q_set(std::uint64_t q_max,
                                             ExceptionRule rule = ExceptionRule::exponents,
                                             Execution exec = Execution::parallel);

// Recheck (i)-(iii) for a record from scratch.
bool satisfies_conditions(const ExceptionRecord& r);

// Records whose t'-side cofactors agree mod 2:
// (q+1-t')/M = (q+1+t')/N (mod 2). Records with non-integral cofactors are
// dropped.
std::vector<ExceptionRecord> parity_filter(const std::vector<ExceptionRecord>& records);

// One row of the published table of exceptional cases with t >= 0.
struct Table1Row {
  std::uint64_t q;
  std::int64_t M, N, t;
  std::vector<std::int64_t> t_primes;
  std::string equation;
  // Conway polynomial of F_q (encoding), 0 for prime fields.
  std::uint64_t conway_modulus = 0;
  // a1, a2, a3, a4, a6: an integer, or a power of the primitive element.
  struct Coef {
    std::int64_t value = 0;
    bool alpha_power = false;
  };
  std::array<Coef, 5> coefficients;
};

const std::vector<Table1Row>& table1_rows();

// Which primitive element stands in for alpha in the table's equations.
enum class AlphaConvention {
  // alpha = x in F_p[x]/(Conway polynomial), the usual computer-algebra model.
  conway,
  // Default modulus and its smallest-encoding primitive element.
  default_field,
};

Curve table1_curve(const Table1Row& row, AlphaConvention alpha = AlphaConvention::conway);

struct Table1Check {
  Table1Row row;
  bool quadruples_ok = false;
  std::vector<std::int64_t> missing_t_primes;
  bool curve_ok = false;
  bool symmetric_match = false;  // matched with t -> -t, M <-> N
  std::uint64_t count = 0;
  std::int64_t lambda = 0, twist_lambda = 0;
  std::string error;
  bool passed() const { return quadruples_ok && curve_ok; }
};

std::vector<Table1Check> verify_table1(AlphaConvention alpha = AlphaConvention::conway);

}  // namespace hassecount
