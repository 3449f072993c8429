#include <benchmark/benchmark.h>

#include "xdecomp/balcut.hpp"
#include "xdecomp/generators.hpp"
#include "xdecomp/jtree.hpp"
#include "xdecomp/oracle.hpp"
#include "xdecomp/prune.hpp"
#include "xdecomp/sparsify.hpp"
#include "xdecomp/tree_cut.hpp"

namespace {

using namespace xdecomp;

void BM_CutWeight(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  WeightedGraph g = gen_random_connected(n, 4 * n, 16, 7);
  VertexSet s;
  for (Vertex v = 0; v < n; v += 2) s.push_back(v);
  for (auto _ : state) {
    Weight w = cut_weight(g, s);
    benchmark::DoNotOptimize(w);
  }
  state.SetComplexityN(g.m());
}
BENCHMARK(BM_CutWeight)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_BruteSparsestCut(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  WeightedGraph g = gen_random_connected(n, 3 * n, 8, 11);
  DemandVector d = gen_random_demands(n, 8, 20, 12);
  for (auto _ : state) {
    OracleResult r = brute_sparsest_cut(g, d, 16);
    benchmark::DoNotOptimize(r.best_value);
  }
}
BENCHMARK(BM_BruteSparsestCut)->DenseRange(8, 14, 2);

void BM_RootedTreeBalCut(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  WeightedGraph t = gen_random_tree(n, 8, 21);
  DemandVector d = DemandVector::uniform(n);
  RootedTree rt = RootedTree::root_at(t, d, find_centroid_root(t, d));
  for (auto _ : state) {
    VertexSet s = rooted_tree_bal_cut(rt, Weight(1));
    benchmark::DoNotOptimize(s);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_RootedTreeBalCut)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

void BM_JTreeDecompose(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  WeightedGraph g = gen_random_connected(n, 4 * n, 16, 33);
  DemandVector d = DemandVector::uniform(n);
  Config cfg;
  cfg.path_store_cap = 0;
  for (auto _ : state) {
    JTreeDistribution dist = decompose(g, d, 4, std::max(n / 8, 1), cfg);
    benchmark::DoNotOptimize(dist.beta_emp);
  }
  state.SetComplexityN(g.m());
}
BENCHMARK(BM_JTreeDecompose)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_Sparsify(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  WeightedGraph g = gen_random_connected(n, 8 * n, 16, 44);
  Config cfg;
  cfg.sparsify_size_const = 0.0;
  for (auto _ : state) {
    SparsifyResult r = sparsify(g, Weight(4), n, cfg);
    benchmark::DoNotOptimize(r.graph);
  }
}
BENCHMARK(BM_Sparsify)->RangeMultiplier(2)->Range(32, 512);

void BM_BalCutPrune(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  WeightedGraph g = gen_random_connected(std::max(m / 4, 4), m, 16, 55);
  NormalizedDemands nd = normalize_demands(DemandVector::degrees(g));
  Config cfg;
  cfg.t_cap = 8;
  for (auto _ : state) {
    PruneResult r = bal_cut_prune(g, nd.demands, Weight(1) / 10, 3, cfg);
    benchmark::DoNotOptimize(r.alpha_emp);
  }
  state.SetComplexityN(m);
}
BENCHMARK(BM_BalCutPrune)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
