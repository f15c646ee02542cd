// Serial reference versus OpenMP kernels on materialized prefixes.
#include <benchmark/benchmark.h>

#include "streamlab/catalog.hpp"
#include "streamlab/constructions.hpp"
#include "streamlab/kernels.hpp"
#include "streamlab/rule.hpp"

namespace {

using namespace streamlab;

const std::string& tm_prefix() {
  static const std::string p = thue_morse().prefix(std::size_t{1} << 20);
  return p;
}

void BM_ApplySerial(benchmark::State& state) {
  const LocalRule rule = mu_chain_rule(static_cast<std::size_t>(state.range(0)));
  const std::string_view row = std::string_view(tm_prefix()).substr(0, 1 << 18);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::apply_prefix_serial(rule, row));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(row.size()));
}

void BM_ApplyParallel(benchmark::State& state) {
  const LocalRule rule = mu_chain_rule(static_cast<std::size_t>(state.range(0)));
  const std::string_view row = std::string_view(tm_prefix()).substr(0, 1 << 18);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::apply_prefix_parallel(rule, row));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(row.size()));
}

// TM against a shifted copy of itself: no radius is conflict-free until the
// window reaches the shift, so every radius is scanned.
void sweep_inputs(std::string& src, std::string& dst) {
  src = tm_prefix().substr(0, 1 << 16);
  dst = tm_prefix().substr(40, 1 << 16);
}

void BM_SweepSerial(benchmark::State& state) {
  std::string src, dst;
  sweep_inputs(src, dst);
  const auto max_radius = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::sweep_serial(src, dst, max_radius, dst.size() - max_radius - 64));
}

void BM_SweepParallel(benchmark::State& state) {
  std::string src, dst;
  sweep_inputs(src, dst);
  const auto max_radius = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::sweep_parallel(src, dst, max_radius, dst.size() - max_radius - 64));
}

}  // namespace

BENCHMARK(BM_ApplySerial)->Arg(1)->Arg(4);
BENCHMARK(BM_ApplyParallel)->Arg(1)->Arg(4);
BENCHMARK(BM_SweepSerial)->Arg(8)->Arg(24);
BENCHMARK(BM_SweepParallel)->Arg(8)->Arg(24);

BENCHMARK_MAIN();
