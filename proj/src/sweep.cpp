#include "hassecount/sweep.hpp"

#include <algorithm>

#include "hassecount/arith.hpp"

namespace hassecount {

namespace {

Element el(std::uint64_t v) { return Element{static_cast<std::uint32_t>(v)}; }

Coefficients decode_index(std::uint64_t idx, std::uint64_t q) {
  Coefficients a;
  for (auto& c : a) {
    c = el(idx % q);
    idx /= q;
  }
  return a;
}

void tally(const Curve& e, CountMethod method, std::uint64_t seed, CountCheck& acc) {
  ++acc.curves;
  try {
    const auto r = count_points(e, method, seed);
    if (r.count != e.count_exhaustive()) ++acc.mismatches;
    acc.samples += r.samples_used;
    acc.max_samples = std::max<std::uint64_t>(acc.max_samples, r.samples_used);
  } catch (const Error&) {
    ++acc.errors;
  }
}

void merge(CountCheck& into, const CountCheck& from) {
  into.curves += from.curves;
  into.mismatches += from.mismatches;
  into.errors += from.errors;
  into.samples += from.samples;
  into.max_samples = std::max(into.max_samples, from.max_samples);
}

}  // namespace

std::vector<Coefficients> normal_form_coefficients(const FieldPtr& field) {
  const Field& f = *field;
  const std::uint64_t q = f.order();
  const Element zero = f.zero(), one = f.one();
  std::vector<Coefficients> out;
  auto keep = [&](const Coefficients& a) {
    if (Curve::try_make(field, a)) out.push_back(a);
  };
  for (std::uint64_t u = 0; u < q; ++u) {
    for (std::uint64_t v = 0; v < q; ++v) {
      switch (f.characteristic()) {
        case 2:
          keep({one, el(u), zero, zero, el(v)});
          for (std::uint64_t w = 1; w < q; ++w) keep({zero, zero, el(w), el(u), el(v)});
          break;
        case 3:
          if (u != 0) keep({zero, el(u), zero, zero, el(v)});
          keep({zero, zero, zero, el(u), el(v)});
          break;
        default:
          keep({zero, zero, zero, el(u), el(v)});
      }
    }
  }
  return out;
}

std::vector<Coefficients> random_coefficients(const FieldPtr& field, std::size_t n,
                                              std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Coefficients> out;
  out.reserve(n);
  while (out.size() < n) {
    Coefficients a;
    for (auto& c : a) c = field->random_element(rng);
    if (Curve::try_make(field, a)) out.push_back(a);
  }
  return out;
}

TraceHistogram trace_histogram(const FieldPtr& field, CurveFamily family, Execution exec) {
  const Field& f = *field;
  const auto bound = static_cast<std::int64_t>(isqrt(4 * f.order()));
  const auto q1 = static_cast<std::int64_t>(f.order()) + 1;
  TraceHistogram hist{bound, std::vector<std::uint64_t>(2 * bound + 1, 0), 0};

  std::vector<Coefficients> members;
  if (family == CurveFamily::normal_forms) members = normal_form_coefficients(field);
  const auto n = static_cast<std::int64_t>(family == CurveFamily::normal_forms
                                               ? members.size()
                                               : ipow(f.order(), 5));

  auto body = [&](std::int64_t i, std::vector<std::uint64_t>& local, std::uint64_t& curves) {
    const Coefficients a = family == CurveFamily::normal_forms
                               ? members[i]
                               : decode_index(static_cast<std::uint64_t>(i), f.order());
    auto e = Curve::try_make(field, a);
    if (!e) return;
    const auto t = q1 - static_cast<std::int64_t>(e->count_exhaustive());
    ++local[t + bound];
    ++curves;
  };

  if (exec == Execution::parallel) {
#pragma omp parallel
    {
      std::vector<std::uint64_t> local(hist.counts.size(), 0);
      std::uint64_t curves = 0;
#pragma omp for schedule(dynamic, 256) nowait
      for (std::int64_t i = 0; i < n; ++i) body(i, local, curves);
#pragma omp critical
      {
        for (std::size_t k = 0; k < local.size(); ++k) hist.counts[k] += local[k];
        hist.curves += curves;
      }
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i, hist.counts, hist.curves);
  }
  return hist;
}

CountCheck check_counts(const FieldPtr& field, const std::vector<Coefficients>& curves,
                        CountMethod method, std::uint64_t seed, Execution exec) {
  CountCheck total;
  const auto n = static_cast<std::int64_t>(curves.size());
  if (exec == Execution::parallel) {
#pragma omp parallel
    {
      CountCheck local;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::int64_t i = 0; i < n; ++i) tally(Curve::make(field, curves[i]), method, seed, local);
#pragma omp critical
      merge(total, local);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) tally(Curve::make(field, curves[i]), method, seed, total);
  }
  return total;
}

CountCheck check_counts(const FieldPtr& field, CurveFamily family, CountMethod method,
                        std::uint64_t seed, Execution exec) {
  if (family == CurveFamily::normal_forms) {
    return check_counts(field, normal_form_coefficients(field), method, seed, exec);
  }
  const Field& f = *field;
  const auto n = static_cast<std::int64_t>(ipow(f.order(), 5));
  CountCheck total;
  auto body = [&](std::int64_t i, CountCheck& acc) {
    auto e = Curve::try_make(field, decode_index(static_cast<std::uint64_t>(i), f.order()));
    if (e) tally(*e, method, seed, acc);
  };
  if (exec == Execution::parallel) {
#pragma omp parallel
    {
      CountCheck local;
#pragma omp for schedule(dynamic, 1024) nowait
      for (std::int64_t i = 0; i < n; ++i) body(i, local);
#pragma omp critical
      merge(total, local);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i, total);
  }
  return total;
}

}  // namespace hassecount
