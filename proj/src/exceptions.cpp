#include "hassecount/exceptions.hpp"

#include <algorithm>

#include "hassecount/arith.hpp"
#include "hassecount/counting.hpp"
#include "hassecount/order.hpp"

namespace hassecount {

namespace {

bool divides(std::int64_t d, std::int64_t n) { return d != 0 && n % d == 0; }

}  // namespace

ExponentRange exponent_range(std::uint64_t q) {
  const auto r = static_cast<std::int64_t>(isqrt(q));
  const std::int64_t ceil_sqrt = (static_cast<std::uint64_t>(r * r) == q) ? r : r + 1;
  return {std::max<std::int64_t>(1, ceil_sqrt - 1), static_cast<std::int64_t>(isqrt(16 * q))};
}

std::vector<ExceptionRecord> enumerate_exceptions(std::uint64_t q, ExceptionRule rule) {
  if (!as_prime_power(q)) fail(ErrorCode::not_prime_power, std::to_string(q) + " is not a prime power");
  const auto range = exponent_range(q);
  const auto b = static_cast<std::int64_t>(isqrt(4 * q));
  const auto q1 = static_cast<std::int64_t>(q + 1);
  const auto qm1 = static_cast<std::int64_t>(q - 1);

  std::vector<ExceptionRecord> out;
  for (std::int64_t M = range.lo; M <= range.hi; ++M) {
    for (std::int64_t N = range.lo; N <= range.hi; ++N) {
      for (std::int64_t t = 0; t <= b; ++t) {
        if ((q1 - t) % M != 0 || (q1 + t) % N != 0) continue;
        const std::int64_t m = (q1 - t) / M;
        const std::int64_t n = (q1 + t) / N;
        if (M % m != 0 || qm1 % m != 0 || N % n != 0 || qm1 % n != 0) continue;
        for (std::int64_t tp = -b; tp <= b; ++tp) {
          if (tp == t || (q1 - tp) % M != 0 || (q1 + tp) % N != 0) continue;
          if (rule != ExceptionRule::exponents) {
            const std::int64_t mp = (q1 - tp) / M;
            const std::int64_t np = (q1 + tp) / N;
            const bool into_exponents = M % mp == 0 && N % np == 0;
            const bool into_q_minus_1 = qm1 % mp == 0 && qm1 % np == 0;
            if (rule != ExceptionRule::q_minus_1_only && !into_exponents) continue;
            if (rule != ExceptionRule::groups && !into_q_minus_1) continue;
          }
          out.push_back({q, M, N, t, tp, m, n});
        }
      }
    }
  }
  return out;
}

std::vector<ExceptionRecord> enumerate_exceptions_corollary(std::uint64_t q) {
  return enumerate_exceptions(q, ExceptionRule::groups_with_q_minus_1);
}

std::vector<ExceptionRecord> sweep_exceptions(std::uint64_t q_max, ExceptionRule rule,
                                              Execution exec) {
  const auto qs = prime_powers_up_to(q_max);
  std::vector<std::vector<ExceptionRecord>> per_q(qs.size());
  const auto count = static_cast<std::int64_t>(qs.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) per_q[i] = enumerate_exceptions(qs[i], rule);
  } else {
    for (std::int64_t i = 0; i < count; ++i) per_q[i] = enumerate_exceptions(qs[i], rule);
  }
  std::vector<ExceptionRecord> out;
  for (auto& v : per_q) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<std::uint64_t> exceptional_q_set(std::uint64_t q_max, ExceptionRule rule,
                                             Execution exec) {
  std::vector<std::uint64_t> qs;
  for (const auto& r : sweep_exceptions(q_max, rule, exec)) {
    if (qs.empty() || qs.back() != r.q) qs.push_back(r.q);
  }
  return qs;
}

bool satisfies_conditions(const ExceptionRecord& r) {
  if (!as_prime_power(r.q)) return false;
  const auto q1 = static_cast<std::int64_t>(r.q) + 1;
  const auto qm1 = static_cast<std::int64_t>(r.q) - 1;
  const auto b = static_cast<std::int64_t>(isqrt(4 * r.q));
  const bool cond_i = r.t >= 0 && r.t <= b && divides(r.M, q1 - r.t) && divides(r.N, q1 + r.t);
  if (!cond_i) return false;
  const std::int64_t m = (q1 - r.t) / r.M, n = (q1 + r.t) / r.N;
  const bool cond_ii = m == r.m && n == r.n && divides(m, r.M) && divides(m, qm1) &&
                       divides(n, r.N) && divides(n, qm1);
  const bool cond_iii = r.t_prime != r.t && r.t_prime >= -b && r.t_prime <= b &&
                        divides(r.M, q1 - r.t_prime) && divides(r.N, q1 + r.t_prime);
  return cond_ii && cond_iii;
}

std::vector<ExceptionRecord> parity_filter(const std::vector<ExceptionRecord>& records) {
  std::vector<ExceptionRecord> out;
  for (const auto& r : records) {
    const auto q1 = static_cast<std::int64_t>(r.q) + 1;
    if (!divides(r.M, q1 - r.t_prime) || !divides(r.N, q1 + r.t_prime)) continue;
    const std::int64_t mp = (q1 - r.t_prime) / r.M;
    const std::int64_t np = (q1 + r.t_prime) / r.N;
    if (mod_floor(mp - np, 2) == 0) out.push_back(r);
  }
  return out;
}

const std::vector<Table1Row>& table1_rows() {
  using C = Table1Row::Coef;
  const C z{0, false};
  auto n = [](std::int64_t v) { return C{v, false}; };
  auto alpha = [](std::int64_t e) { return C{e, true}; };
  static const std::vector<Table1Row> rows = {
      {3, 2, 2, 0, {-2, 2}, "y^2=x^3-x", 0, {z, z, z, n(-1), z}},
      {4, 1, 3, 4, {-2, 1}, "y^2+y=x^3+a^2", 7, {z, z, n(1), z, alpha(2)}},
      {5, 2, 4, 2, {-2}, "y^2=x^3+x", 0, {z, z, z, n(1), z}},
      {7, 2, 6, 4, {-2}, "y^2=x^3-1", 0, {z, z, z, z, n(-1)}},
      {7, 4, 4, 0, {-4, 4}, "y^2=x^3+3x", 0, {z, z, z, n(3), z}},
      {9, 2, 4, 6, {-6, -2, 2}, "y^2=x^3+a^2x", 17, {z, z, z, alpha(2), z}},
      {11, 4, 8, 4, {-4}, "y^2=x^3+x+9", 0, {z, z, z, n(1), n(9)}},
      {11, 6, 6, 0, {-6, 6}, "y^2=x^3+2x", 0, {z, z, z, n(2), z}},
      {16, 3, 5, 8, {-7}, "y^2+y=x^3", 19, {z, z, n(1), z, z}},
      {17, 6, 12, 6, {-6}, "y^2=x^3+x+7", 0, {z, z, z, n(1), n(7)}},
      {23, 8, 16, 8, {-8}, "y^2=x^3+5x+15", 0, {z, z, z, n(5), n(15)}},
      {25, 4, 6, 10, {-2}, "y^2+y=x^3+a^7", 47, {z, z, n(1), z, alpha(7)}},
      {29, 10, 20, 10, {-10}, "y^2=x^3+x", 0, {z, z, z, n(1), z}},
      {49, 6, 8, 14, {-10}, "y^2=x^3+a^2x", 94, {z, z, z, alpha(2), z}},
  };
  return rows;
}

Curve table1_curve(const Table1Row& row, AlphaConvention convention) {
  const bool conway = convention == AlphaConvention::conway && row.conway_modulus != 0;
  auto field = conway ? Field::from_order(row.q, row.conway_modulus) : Field::from_order(row.q);
  // Conway polynomials are primitive, so x generates F_q^*.
  const Element alpha = conway ? field->element(field->characteristic()) : field->primitive_element();
  if (field->multiplicative_order(alpha) != row.q - 1) {
    fail(ErrorCode::internal, "alpha is not a primitive element");
  }
  Coefficients a;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& c = row.coefficients[i];
    a[i] = c.alpha_power ? field->pow(alpha, static_cast<std::uint64_t>(c.value))
                         : field->from_int(c.value);
  }
  return Curve::make(field, a);
}

std::vector<Table1Check> verify_table1(AlphaConvention alpha) {
  std::vector<Table1Check> out;
  for (const auto& row : table1_rows()) {
    Table1Check check;
    check.row = row;
    const auto records = enumerate_exceptions(row.q);
    for (auto tp : row.t_primes) {
      const ExceptionRecord want{row.q,
                                 row.M,
                                 row.N,
                                 row.t,
                                 tp,
                                 (static_cast<std::int64_t>(row.q) + 1 - row.t) / row.M,
                                 (static_cast<std::int64_t>(row.q) + 1 + row.t) / row.N};
      if (std::find(records.begin(), records.end(), want) == records.end()) {
        check.missing_t_primes.push_back(tp);
      }
    }
    check.quadruples_ok = check.missing_t_primes.empty();
    try {
      const Curve e = table1_curve(row, alpha);
      check.count = e.count_exhaustive();
      check.lambda = lambda_exponent(e);
      check.twist_lambda = lambda_exponent(e.quadratic_twist());
      const auto q1 = static_cast<std::int64_t>(row.q) + 1;
      const auto count = static_cast<std::int64_t>(check.count);
      const bool direct = count == q1 - row.t && check.lambda == row.M && check.twist_lambda == row.N;
      const bool mirrored =
          count == q1 + row.t && check.lambda == row.N && check.twist_lambda == row.M;
      check.curve_ok = direct || mirrored;
      check.symmetric_match = !direct && mirrored;
    } catch (const Error& err) {
      check.error = err.what();
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace hassecount
