#include <benchmark/benchmark.h>

#include "cffwb/cover.hpp"
#include "cffwb/graphs.hpp"
#include "cffwb/setsystem.hpp"

namespace {

void BM_ExactBcKminus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cffwb::LabeledGraph g = cffwb::build_kminus(n);
  for (auto _ : state) {
    auto res = cffwb::exact_bcd(g, 1);
    benchmark::DoNotOptimize(res.lower);
  }
}
BENCHMARK(BM_ExactBcKminus)->Arg(3)->Arg(4)->Arg(5);

void BM_MaximalBicliques(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  cffwb::LabeledGraph g = cffwb::build_bi_intersection(t, 2, 1);
  for (auto _ : state) {
    auto bicliques = cffwb::enumerate_maximal_bicliques(g);
    benchmark::DoNotOptimize(bicliques.size());
  }
}
BENCHMARK(BM_MaximalBicliques)->Arg(4)->Arg(5)->Arg(6);

void BM_CffCheck(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  cffwb::SetSystem sys;
  sys.n_points = t;
  for (int i = 0; i < t; ++i) {
    cffwb::PointSet b(t);
    b.set(i);
    sys.blocks.push_back(b);
  }
  for (auto _ : state) {
    auto res = cffwb::is_cff(sys, 1, 1, 1);
    benchmark::DoNotOptimize(res.ok);
  }
}
BENCHMARK(BM_CffCheck)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
