// Serial vs OpenMP timings for the sweep kernels. Each kernel is run on both
// paths, the results are compared, and the best of --reps wall times is
// reported.
//
//   hassecount_bench [--reps N] [--jobs N]

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "hassecount/counting.hpp"
#include "hassecount/exceptions.hpp"
#include "hassecount/parallel.hpp"
#include "hassecount/sweep.hpp"

using namespace hassecount;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

template <class Kernel>
void row(const char* name, int reps, Kernel kernel) {
  decltype(kernel(Execution::serial)) serial_result, parallel_result;
  const double ts = best_of(reps, [&] { serial_result = kernel(Execution::serial); });
  const double tp = best_of(reps, [&] { parallel_result = kernel(Execution::parallel); });
  std::printf("%-34s %10.3f %10.3f %8.2fx  %s\n", name, ts, tp, ts / tp,
              serial_result == parallel_result ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel sweep kernels"};
  int reps = 3, jobs = 0;
  app.add_option("--reps", reps, "repetitions per kernel (best time kept)");
  app.add_option("--jobs", jobs, "OpenMP threads (0: runtime default)");
  CLI11_PARSE(app, argc, argv);
  if (jobs > 0) set_worker_count(jobs);

  std::printf("threads: %d\n", worker_count());
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

  row("exceptions, q <= 1024", reps,
      [](Execution e) { return sweep_exceptions(1024, ExceptionRule::exponents, e); });
  row("exceptions, q <= 4096", reps,
      [](Execution e) { return sweep_exceptions(4096, ExceptionRule::exponents, e); });

  auto f16 = Field::from_order(16);
  row("trace histogram, F_16 all curves", reps,
      [&](Execution e) { return trace_histogram(f16, CurveFamily::all_coefficients, e); });
  auto f257 = Field::from_order(257);
  row("trace histogram, F_257 normal forms", reps,
      [&](Execution e) { return trace_histogram(f257, CurveFamily::normal_forms, e); });

  auto f256 = Field::from_order(256);
  const auto curves = random_coefficients(f256, 20000, 1);
  row("point-order counts, F_256 x20000", reps, [&](Execution e) {
    return check_counts(f256, curves, CountMethod::point_order, 0, e);
  });
  return 0;
}
