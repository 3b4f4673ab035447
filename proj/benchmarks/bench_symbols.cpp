#include <benchmark/benchmark.h>

#include "zetahess/formcombi.hpp"
#include "zetahess/sampling.hpp"
#include "zetahess/symbolengine.hpp"

using namespace zetahess;

namespace {

void BM_VariationTensor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(variation_tensor(OperatorKind::DeRham, n, n / 2));
}
BENCHMARK(BM_VariationTensor)->DenseRange(3, 7);

template <bool Direct>
void BM_Symbol(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Sampler s(kDefaultSeed);
  const auto vt = variation_tensor(OperatorKind::DeRham, n, n / 2);
  const auto h = s.perturbation(n);
  const auto xi = s.covector(n);
  for (auto _ : state) {
    if constexpr (Direct)
      benchmark::DoNotOptimize(direct_symbol(vt, h, xi));
    else
      benchmark::DoNotOptimize(grouped_symbol(vt, h, xi));
  }
}
BENCHMARK(BM_Symbol<true>)->Name("BM_DirectSymbol")->DenseRange(3, 7);
BENCHMARK(BM_Symbol<false>)->Name("BM_GroupedSymbol")->DenseRange(3, 7);

void BM_ClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Sampler s(kDefaultSeed);
  const auto h = s.perturbation(n);
  const auto xi = s.covector(n);
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_reduced(OperatorKind::DeRham, n, n / 2, h, xi));
}
BENCHMARK(BM_ClosedForm)->DenseRange(3, 7);

void BM_IdentitySum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pattern = FactorPattern::repeated(FactorKind::Sgn, 4);
  for (auto _ : state) benchmark::DoNotOptimize(identity_sum(n, n / 2, pattern, {0, 1, 2, 3}));
}
BENCHMARK(BM_IdentitySum)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
