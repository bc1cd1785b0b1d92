#include <benchmark/benchmark.h>

#include "bruhat/harness.hpp"
#include "bruhat/hypercube.hpp"
#include "bruhat/interval.hpp"
#include "bruhat/kl.hpp"
#include "bruhat/reflection_order.hpp"

namespace {

using bruhat::BruhatInterval;
using bruhat::Permutation;

Permutation longest(int n) {
  std::string s;
  for (int k = n; k >= 1; --k) s += static_cast<char>('0' + k);
  return Permutation::parse(s);
}

Permutation identity(int n) {
  std::string s;
  for (int k = 1; k <= n; ++k) s += static_cast<char>('0' + k);
  return Permutation::parse(s);
}

void BM_IntervalBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto u = identity(n);
  const auto v = longest(n);
  for (auto _ : state) {
    BruhatInterval iv(u, v);
    benchmark::DoNotOptimize(iv.size());
  }
}
BENCHMARK(BM_IntervalBuild)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

// Fresh table each iteration, so this measures the full recursion.
void BM_RtildeFullInterval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto u = identity(n);
  const auto v = longest(n);
  for (auto _ : state) {
    bruhat::KLTable table;
    benchmark::DoNotOptimize(table.rtilde(u, v));
  }
}
BENCHMARK(BM_RtildeFullInterval)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_PFullInterval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto u = identity(n);
  const auto v = longest(n);
  for (auto _ : state) {
    bruhat::KLTable table;
    benchmark::DoNotOptimize(table.p(u, v));
  }
}
BENCHMARK(BM_PFullInterval)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

void BM_RtildeByPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BruhatInterval iv(identity(n), longest(n));
  const auto order = bruhat::ReflectionOrder::lexicographic(n);
  for (auto _ : state) benchmark::DoNotOptimize(bruhat::rtilde_by_paths(iv, order));
}
BENCHMARK(BM_RtildeByPaths)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

void BM_StandardHcd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BruhatInterval iv(identity(n), longest(n));
  for (auto _ : state) benchmark::DoNotOptimize(bruhat::standard_hcd(iv));
}
BENCHMARK(BM_StandardHcd)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_StrongScan(benchmark::State& state) {
  const BruhatInterval iv(Permutation::parse("132546"), Permutation::parse("651234"));
  for (auto _ : state) benchmark::DoNotOptimize(bruhat::enumerate_strong_hcds(iv));
}
BENCHMARK(BM_StrongScan)->Unit(benchmark::kMillisecond);

void BM_VerifyS4(benchmark::State& state) {
  bruhat::VerifyOptions options;
  options.n = 4;
  options.exhaustive_z = state.range(0) != 0;
  for (auto _ : state) {
    bruhat::KLTable table;
    benchmark::DoNotOptimize(bruhat::run_verify(options, table, nullptr));
  }
}
BENCHMARK(BM_VerifyS4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
