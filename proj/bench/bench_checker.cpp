// Serial reference against the OpenMP kernels. Arg: worker count.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <cmath>

#include "flexpoly/flex.hpp"
#include "flexpoly/steffen.hpp"

using namespace flexpoly;

namespace {

const ExactRealization& exact_model() {
  static const steffen::SteffenModel m = steffen::build_steffen();
  return m.realization;
}

const FloatRealization& float_frame() {
  static const flex::FlexFrame f = flex::realize_flex(std::asin(19.0 / 80.0));
  return f.realization;
}

void BM_CheckExactSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_embedded_serial(exact_model()));
}

void BM_CheckExactParallel(benchmark::State& state) {
  const CheckOptions options{false, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(check_embedded(exact_model(), options));
}

void BM_CheckFloatSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_embedded_serial(float_frame()));
}

void BM_CheckFloatParallel(benchmark::State& state) {
  const CheckOptions options{false, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(check_embedded(float_frame(), options));
}

void BM_FlexScan(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(flex::scan_embeddedness(0, 0.25, 100, kDefaultEpsilon, workers));
}

void worker_args(benchmark::internal::Benchmark* b) {
  for (int w = 1; w <= omp_get_num_procs() * 2; w *= 2) b->Arg(w);
}

}  // namespace

BENCHMARK(BM_CheckExactSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckExactParallel)->Apply(worker_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CheckFloatSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CheckFloatParallel)->Apply(worker_args)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_FlexScan)->Apply(worker_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
