// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "weightvar/gkm.hpp"
#include "weightvar/kirwan.hpp"
#include "weightvar/schubert.hpp"

using namespace weightvar;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

std::vector<Rational> spectrum(int n) {
  std::vector<Rational> lam;
  for (int i = 0; i < n; ++i) lam.emplace_back(n - 1 - 2 * i, 1);
  lam.front() += Rational(1, 7);
  lam.back() -= Rational(1, 7);
  return lam;
}

void BM_EnumeratePairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const auto lam = spectrum(n);
  std::vector<Rational> mu(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) mu[static_cast<std::size_t>(i)] = Rational(n - 1 - 2 * i, 11 * n);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pairs(lam, mu, exec_of(state)));
}
BENCHMARK(BM_EnumeratePairs)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

void BM_RestrictionTuple(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const Poly f = shared_schubert(n).schubert_class(Permutation::identity(n), Permutation::identity(n)).poly;
  for (auto _ : state) benchmark::DoNotOptimize(restriction_tuple(f, exec_of(state)));
}
BENCHMARK(BM_RestrictionTuple)->ArgsProduct({{0, 1}, {4, 5}})->Unit(benchmark::kMillisecond);

void BM_SchubertPrecompute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    SchubertCalculator calc(n);
    calc.precompute(exec_of(state));
    benchmark::DoNotOptimize(calc.cached_derivatives());
  }
}
BENCHMARK(BM_SchubertPrecompute)->ArgsProduct({{0, 1}, {4, 5}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
