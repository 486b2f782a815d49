#include <benchmark/benchmark.h>

#include "ncb/bruhat_lattice.hpp"
#include "ncb/coxeter_general.hpp"

namespace {

void BM_EnumerateNc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ncb::enumerate_nc(n));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EnumerateNc)->Arg(5)->Arg(7)->Arg(8);

void BM_EnumerateIdeals(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ncb::enumerate_ideals(n));
}
BENCHMARK(BM_EnumerateIdeals)->Arg(5)->Arg(7)->Arg(8);

void BM_ThreeBijections(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ideals = ncb::enumerate_ideals(n);
  for (auto _ : state)
    for (const auto& p : ideals) {
      benchmark::DoNotOptimize(ncb::dyck_map(p));
      benchmark::DoNotOptimize(ncb::vertical_map(p));
      benchmark::DoNotOptimize(ncb::diagonal_map(p));
    }
  state.SetItemsProcessed(state.iterations() * ideals.size() * 3);
}
BENCHMARK(BM_ThreeBijections)->Arg(5)->Arg(7);

void BM_BruhatPairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto nc = ncb::enumerate_nc(n);
  std::vector<ncb::Permutation> perms;
  for (const auto& x : nc) perms.push_back(x.permutation());
  for (auto _ : state) {
    int count = 0;
    for (const auto& a : perms)
      for (const auto& b : perms) count += ncb::bruhat_leq(a, b);
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * perms.size() * perms.size());
}
BENCHMARK(BM_BruhatPairs)->Arg(4)->Arg(5)->Arg(6);

void BM_PhiResolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto coxeters = ncb::coxeter_elements(n);
  const auto& last = coxeters.back();  // fully reversed labels, most crossings
  const auto interval = ncb::enumerate_nc_general(n, last.permutation);
  for (auto _ : state)
    for (const auto& x : interval) benchmark::DoNotOptimize(ncb::phi(x, last.permutation));
  state.SetItemsProcessed(state.iterations() * interval.size());
}
BENCHMARK(BM_PhiResolution)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
