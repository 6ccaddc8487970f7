// Compares the serial reference loops of the verification kernels against
// their OpenMP counterparts. Run with --benchmark_filter=... to narrow down.

#include <benchmark/benchmark.h>

#include "tonal/verify.hpp"

using tonal::verify::Mode;
using tonal::verify::SuiteResult;

namespace {

template <SuiteResult (*Suite)(Mode)>
void run(benchmark::State& state, Mode mode) {
  for (auto _ : state) {
    SuiteResult result = Suite(mode);
    benchmark::DoNotOptimize(result.failures);
  }
}

}  // namespace

#define TONAL_BENCH_SUITE(fn)                                             \
  void bench_##fn##_serial(benchmark::State& state) {                    \
    run<&tonal::verify::fn>(state, Mode::Serial);                         \
  }                                                                       \
  void bench_##fn##_parallel(benchmark::State& state) {                  \
    run<&tonal::verify::fn>(state, Mode::Parallel);                       \
  }                                                                       \
  BENCHMARK(bench_##fn##_serial);                                         \
  BENCHMARK(bench_##fn##_parallel)

TONAL_BENCH_SUITE(suite_homomorphism);
TONAL_BENCH_SUITE(suite_shift_theorem);
TONAL_BENCH_SUITE(suite_solve_translation);
TONAL_BENCH_SUITE(suite_cayley_homomorphism);
TONAL_BENCH_SUITE(suite_orbit_partition);
TONAL_BENCH_SUITE(suite_action_axioms);

void bench_run_all_serial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tonal::verify::run_all(Mode::Serial));
  }
}
BENCHMARK(bench_run_all_serial);

void bench_run_all_parallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tonal::verify::run_all(Mode::Parallel));
  }
}
BENCHMARK(bench_run_all_parallel);

BENCHMARK_MAIN();
