#include <benchmark/benchmark.h>

#include "projframe/desargues.hpp"
#include "projframe/fuzz.hpp"
#include "projframe/generators.hpp"
#include "projframe/linalg.hpp"

using namespace projframe;

namespace {

Mat sample_matrix(std::size_t n) {
  Rng rng(n);
  return gen_invertible(n, rng, 9);
}

void BM_Rref(benchmark::State& state) {
  const Mat m = sample_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->DenseRange(3, 8);

void BM_Det(benchmark::State& state) {
  const Mat m = sample_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det)->DenseRange(3, 8);

void BM_Inverse(benchmark::State& state) {
  const Mat m = sample_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse(m));
}
BENCHMARK(BM_Inverse)->DenseRange(3, 6);

void BM_CheckMainTheorem(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  const AdaptedFrame r = gen_adapted_frame(n, rng, 9);
  const PerspectiveCoeffs c = gen_strict_coeffs(n, rng, 9, HChoice::Any);
  const AdaptedFrame r2 = gen_perspective_mate(r, c.h, c.a);
  for (auto _ : state) benchmark::DoNotOptimize(check_main_theorem(r, r2));
}
BENCHMARK(BM_CheckMainTheorem)->DenseRange(2, 5);

void BM_FuzzTrial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mode = static_cast<FuzzMode>(state.range(1));
  std::size_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_trial(mode, 0, n, trial++, 9));
  state.SetLabel(std::string(to_string(mode)));
}
BENCHMARK(BM_FuzzTrial)
    ->ArgsProduct({{2, 3, 4, 5},
                   {static_cast<long>(FuzzMode::StrictPerspective), static_cast<long>(FuzzMode::InH),
                    static_cast<long>(FuzzMode::General)}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
