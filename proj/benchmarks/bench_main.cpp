#include <benchmark/benchmark.h>

#include <random>

#include "f2orbit/classify.hpp"
#include "f2orbit/f2la.hpp"
#include "f2orbit/orbits.hpp"
#include "f2orbit/tri.hpp"

using namespace f2orbit;

// Raw generator throughput: every move of the first action applied to a
// stream of states.
static void BM_MaskApply(benchmark::State& state) {
  const ActionSpec spec(static_cast<int>(state.range(0)), ActionKind::First);
  const auto moves = spec.moves();
  std::uint64_t x = 0x9e3779b97f4a7c15ULL & ((std::uint64_t{1} << spec.state_dim()) - 1);
  for (auto _ : state) {
    for (const auto& mv : moves) x = mv(x);
    benchmark::DoNotOptimize(x);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(moves.size()));
}
BENCHMARK(BM_MaskApply)->Arg(5)->Arg(7);

static void BM_EnumerateFirst(benchmark::State& state) {
  const ActionSpec spec(static_cast<int>(state.range(0)), ActionKind::First);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(spec, {1}).orbit_count());
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << spec.state_dim()));
}
BENCHMARK(BM_EnumerateFirst)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSecond(benchmark::State& state) {
  const ActionSpec spec(static_cast<int>(state.range(0)), ActionKind::Second);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(spec, {1}).orbit_count());
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << spec.state_dim()));
}
BENCHMARK(BM_EnumerateSecond)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_KernelBasis(benchmark::State& state) {
  const BilinearForm form = hex_form(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(form).size());
}
BENCHMARK(BM_KernelBasis)->Arg(9)->Arg(20);

static void BM_Arf(benchmark::State& state) {
  const QuadraticSpace q = hex_space(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(arf(q));
}
BENCHMARK(BM_Arf)->Arg(9)->Arg(20);
BENCHMARK_MAIN();
