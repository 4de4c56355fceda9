// Parallel vs serial for the three enumeration kernels.
#include <benchmark/benchmark.h>

#include "uac/pgl2/pgl2.hpp"
#include "uac/witt/lattice.hpp"
#include "uac/witt/witt.hpp"

using namespace uac;

namespace {

void BM_CosetWalk(benchmark::State& st) {
  const auto f = FiniteField::make(3);
  const auto g = LaurentMatrix::parse(f, "0,1;e,0");
  const int bound = static_cast<int>(st.range(0));
  const bool par = st.range(1) != 0;
  std::int64_t visited = 0;
  for (auto _ : st) benchmark::DoNotOptimize(coset_hits(g, bound, par, &visited));
  st.counters["cosets"] = static_cast<double>(visited);
}
BENCHMARK(BM_CosetWalk)->ArgsProduct({{6, 8, 10}, {0, 1}})->ArgNames({"bound", "parallel"})->Unit(benchmark::kMillisecond);

void BM_WittOracle(benchmark::State& st) {
  const int p = static_cast<int>(st.range(0));
  const bool par = st.range(1) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(witt_oracle_sweep(p, 3, par));
}
BENCHMARK(BM_WittOracle)->ArgsProduct({{3, 5}, {0, 1}})->ArgNames({"p", "parallel"})->Unit(benchmark::kMillisecond);

void BM_Submodules(benchmark::State& st) {
  const bool par = st.range(0) != 0;
  std::size_t n = 0;
  for (auto _ : st) n = enumerate_submodules(3, 2, 3, -1, par).size();
  st.counters["submodules"] = static_cast<double>(n);
}
BENCHMARK(BM_Submodules)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_XnSweep(benchmark::State& st) {
  const auto g = LieLatticeDatum::sl2(3);
  const bool par = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_X_n(g, 1, par));
}
BENCHMARK(BM_XnSweep)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
