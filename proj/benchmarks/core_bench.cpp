#include <benchmark/benchmark.h>

#include "indigenous/graph.hpp"
#include "indigenous/ideal.hpp"
#include "indigenous/ideal_semiring.hpp"
#include "indigenous/laws.hpp"
#include "indigenous/localization.hpp"
#include "indigenous/quadratic.hpp"

namespace {

using namespace indigenous;

void BM_VerifyLaws(benchmark::State& state) {
  const SemiringCtx ctx(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_laws(ctx));
}
BENCHMARK(BM_VerifyLaws)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_EnumerateIdeals(benchmark::State& state) {
  const SemiringCtx ctx(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(ctx));
}
BENCHMARK(BM_EnumerateIdeals)->DenseRange(4, 14, 2)->Unit(benchmark::kMillisecond);

void BM_CliqueNumber(benchmark::State& state) {
  const auto g = build_graph(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(clique_number(g));
}
BENCHMARK(BM_CliqueNumber)->Arg(8)->Arg(16)->Arg(24);

void BM_ChromaticNumber(benchmark::State& state) {
  const auto g = build_graph(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber)->Arg(8)->Arg(16)->Arg(24);

void BM_IdealSemiring(benchmark::State& state) {
  const SemiringCtx ctx(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ideal_semiring(ctx));
}
BENCHMARK(BM_IdealSemiring)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_LocalizeAll(benchmark::State& state) {
  const SemiringCtx ctx(static_cast<std::uint32_t>(state.range(0)));
  const auto sets = multiplicative_sets(ctx);
  for (auto _ : state) {
    for (const auto& u : sets) benchmark::DoNotOptimize(localize(ctx, u));
  }
}
BENCHMARK(BM_LocalizeAll)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FactorizationOracle(benchmark::State& state) {
  const SemiringCtx ctx(static_cast<std::uint32_t>(state.range(0)));
  const Poly f(ctx, {Elem::fin(1), Elem::zero(), Elem::many()});
  for (auto _ : state) benchmark::DoNotOptimize(factorization_oracle(f));
}
BENCHMARK(BM_FactorizationOracle)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
