// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "qo/checks.hpp"
#include "qo/enumerate.hpp"
#include "qo/envelope.hpp"

namespace {

void BM_GenusTableParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qo::genus_distribution(n));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(qo::double_factorial_odd(n)));
}

void BM_GenusTableSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qo::genus_distribution_serial(n));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(qo::double_factorial_odd(n)));
}

void axioms(benchmark::State& state, qo::Execution execution) {
  qo::CheckConfig config;
  config.max_labels = static_cast<int>(state.range(0));
  config.max_g = 1;
  config.random_instances = 0;
  config.execution = execution;
  const auto source = qo::qo_samples(config);
  for (auto _ : state) benchmark::DoNotOptimize(qo::check_axioms(qo::QoTarget{}, source, config));
}

void BM_AxiomsParallel(benchmark::State& state) { axioms(state, qo::Execution::parallel); }
void BM_AxiomsSerial(benchmark::State& state) { axioms(state, qo::Execution::serial); }

}  // namespace

BENCHMARK(BM_GenusTableParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenusTableSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AxiomsParallel)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AxiomsSerial)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
