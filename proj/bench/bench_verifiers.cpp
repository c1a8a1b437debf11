// Serial reference vs OpenMP enumeration for the exhaustive verifiers.

#include <benchmark/benchmark.h>

#include "aspec/bethe.hpp"
#include "aspec/bounds.hpp"

namespace {

using aspec::Execution;

const std::vector<double> kAlphas{0.0, 0.25, 0.5, 0.75, 1.0};

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_T2Trees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(aspec::verify_t2_exhaustive(n, kAlphas, mode(state)).checks);
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_T2Trees)->ArgsProduct({{0, 1}, {7, 8}})->Unit(benchmark::kMillisecond);

void BM_T3Connected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        aspec::verify_t3_exhaustive(n, kAlphas, aspec::GraphClass::connected, mode(state)).checks);
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_T3Connected)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

void BM_Sandwich(benchmark::State& state) {
  const auto fixtures = aspec::standard_fixtures();
  const auto alphas = aspec::alpha_grid(10);
  for (auto _ : state) benchmark::DoNotOptimize(aspec::verify_sandwich(fixtures, alphas, mode(state)).checks);
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Sandwich)->ArgsProduct({{0, 1}, {0}})->Unit(benchmark::kMillisecond);

void BM_BetheSpectrum(benchmark::State& state) {
  const auto spec = aspec::bethe_spec(2, static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(aspec::bethe_spectrum(spec, aspec::AlphaParam(0.4), mode(state)).entries.size());
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_BetheSpectrum)->ArgsProduct({{0, 1}, {20, 50}})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
