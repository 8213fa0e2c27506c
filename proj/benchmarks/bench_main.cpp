#include <uthopf/gl_bridge.hpp>
#include <uthopf/scf.hpp>
#include <uthopf/ut_algebra.hpp>

#include <benchmark/benchmark.h>

using namespace uthopf;

static void BM_EnumerateNuios(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_nuios(n));
}
BENCHMARK(BM_EnumerateNuios)->DenseRange(4, 8, 2);

static void BM_ScfCoproduct(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const auto all = enumerate_nuios(n);
  for (auto _ : state)
    for (const auto &pi : all)
      benchmark::DoNotOptimize(scf_coproduct(ScfElement::basis(pi)));
}
BENCHMARK(BM_ScfCoproduct)->DenseRange(3, 6);

static void BM_ScfAntipode(benchmark::State &state) {
  // Memoized after the first pass; this measures the cached path.
  const Nuio pi = Nuio::antichain(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(scf_antipode(ScfElement::basis(pi)));
}
BENCHMARK(BM_ScfAntipode)->DenseRange(3, 6);

static void BM_PatternGroup(benchmark::State &state) {
  const PrimeField f(static_cast<int>(state.range(1)));
  const Nuio pi = Nuio::chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    // Rebuild the table from cached elements so the class computation is what gets timed.
    GroupTable g("bench", interval(pi.size()), f, pattern_group(PatternDescriptor::from_nuio(pi), f)->elements());
    benchmark::DoNotOptimize(g.class_count());
  }
}
BENCHMARK(BM_PatternGroup)->Args({4, 2})->Args({4, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);

static void BM_UtCoproduct(benchmark::State &state) {
  const PrimeField f(static_cast<int>(state.range(0)));
  const auto g = ut_group(4, f);
  const auto x = UtCfElement::homogeneous(ClassFunction::class_indicator(g, g->class_count() / 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(ut_delta(x));
}
BENCHMARK(BM_UtCoproduct)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_InduceToGl(benchmark::State &state) {
  const PrimeField f(static_cast<int>(state.range(1)));
  const auto u = ut_group(static_cast<int>(state.range(0)), f);
  const auto psi = ClassFunction::class_indicator(u, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(induce_ut_to_gl(psi));
}
BENCHMARK(BM_InduceToGl)->Args({3, 2})->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);

static void BM_GlProduct(benchmark::State &state) {
  const PrimeField f(2);
  const auto a = ClassFunction::one(general_linear_group(2, f));
  const auto b = ClassFunction::one(general_linear_group(2, f));
  for (auto _ : state)
    benchmark::DoNotOptimize(gl_mu_homogeneous(ProductFunction::tensor(a, b)));
}
BENCHMARK(BM_GlProduct)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
