#include <benchmark/benchmark.h>

#include "extremal/chevalley.hpp"
#include "extremal/nilquot.hpp"
#include "extremal/rootgroups.hpp"
#include "extremal/smallgen.hpp"

using namespace extremal;

namespace {

void BM_SandwichAlgebra(benchmark::State& state) {
  int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nilquot::sandwich_algebra(r).dim());
}
BENCHMARK(BM_SandwichAlgebra)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_AssocDims(benchmark::State& state) {
  int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nilquot::assoc_dims_via_embedding(r).total);
}
BENCHMARK(BM_AssocDims)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

const std::vector<std::pair<char, int>> kTypes = {{'A', 2}, {'G', 2}, {'D', 4}, {'F', 4}, {'E', 6}, {'E', 7}, {'E', 8}};

void BM_ChevalleyConstruction(benchmark::State& state) {
  auto [t, n] = kTypes[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(1, t) + std::to_string(n));
  for (auto _ : state) benchmark::DoNotOptimize(ChevalleyAlgebra(t, n, Field::rationals()).dim());
}
BENCHMARK(BM_ChevalleyConstruction)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_Mingen(benchmark::State& state) {
  auto [t, n] = kTypes[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(1, t) + std::to_string(n));
  ChevalleyAlgebra g(t, n, Field::prime(5));
  for (auto _ : state) benchmark::DoNotOptimize(mingen_row(g).pass());
}
BENCHMARK(BM_Mingen)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_ExtremalForm(benchmark::State& state) {
  auto [t, n] = kTypes[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(1, t) + std::to_string(n));
  ChevalleyAlgebra g(t, n, Field::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(extremal_form(g.algebra(), extremal_spanning_set(g)).gram.rank());
}
BENCHMARK(BM_ExtremalForm)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ExpAutomorphism(benchmark::State& state) {
  ChevalleyAlgebra g('E', 6, Field::rationals());
  Vec x = g.x(g.root_system().highest_root());
  Scalar s = Field::rationals().from_ratio(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(exp_automorphism(g.algebra(), x, s).matrix.rows());
}
BENCHMARK(BM_ExpAutomorphism)->Unit(benchmark::kMillisecond);

void BM_Radical(benchmark::State& state) {
  ChevalleyAlgebra g('G', 2, Field::prime(3));
  for (auto _ : state) benchmark::DoNotOptimize(solvable_radical(g.algebra()).space.dim());
}
BENCHMARK(BM_Radical)->Unit(benchmark::kMillisecond);

void BM_BuildM(benchmark::State& state) {
  auto p = smallgen::TriangleParams::make(Field::rationals(), -2, -2, -2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(smallgen::build_M(p).algebra.dim());
}
BENCHMARK(BM_BuildM)->Unit(benchmark::kMicrosecond);

void BM_RootGroupsSuite(benchmark::State& state) {
  ChevalleyAlgebra g('A', 3, Field::prime(5));
  for (auto _ : state) benchmark::DoNotOptimize(rootgroups::rootgroups_suite(g, 1).pass());
}
BENCHMARK(BM_RootGroupsSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
