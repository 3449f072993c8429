#include "xdecomp/tree_cut.hpp"

#include <algorithm>

#include "doctest.h"
#include "testutil.hpp"
#include "xdecomp/errors.hpp"
#include "xdecomp/generators.hpp"

using namespace xdecomp;
using namespace xdecomp::test;

namespace {

// Best qualifying union of disjoint rooted subtrees, by enumeration: the
// reference point of the tree procedure's balance guarantee.
struct TreeStar {
  Weight demand = 0;
  bool exists = false;
};

TreeStar brute_rooted_subtree_star(const RootedTree& rt, const Weight& psi_t) {
  const int n = rt.tree.n();
  std::vector<Vertex> non_root;
  for (Vertex v = 0; v < n; ++v)
    if (v != rt.root) non_root.push_back(v);
  // ancestor[a][b]: a is a strict ancestor of b.
  std::vector<std::vector<char>> ancestor(n, std::vector<char>(n, 0));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex a = rt.parent[v]; a != -1; a = rt.parent[a]) ancestor[a][v] = 1;

  TreeStar best;
  const int k = static_cast<int>(non_root.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<Vertex> roots;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) roots.push_back(non_root[i]);
    bool antichain = true;
    for (Vertex a : roots)
      for (Vertex b : roots)
        if (a != b && ancestor[a][b]) antichain = false;
    if (!antichain) continue;
    Weight demand = 0, boundary = 0;
    for (Vertex u : roots) {
      demand += rt.subtree_demand[u];
      boundary += rt.tree.edge(rt.parent_edge[u]).w;
    }
    if (demand == 0) continue;
    if (3 * demand > 2 * rt.total_demand) continue;
    if (boundary > psi_t * demand) continue;
    if (!best.exists || demand > best.demand) {
      best.exists = true;
      best.demand = demand;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("find_centroid_root fixtures") {
  DemandVector d3 = DemandVector::uniform(3);
  CHECK(find_centroid_root(gen_path(3), d3) == 1);
  CHECK(find_centroid_root(star(5), DemandVector::uniform(6)) == 0);
  CHECK(find_centroid_root(gen_path(1), DemandVector::uniform(1)) == 0);

  CHECK_THROWS_AS(find_centroid_root(c4(), DemandVector::uniform(4)), NotATree);
  WeightedGraph forest = WeightedGraph::from_edges(4, {{0, 1, Weight(1)}, {2, 3, Weight(1)}});
  CHECK_THROWS_AS(find_centroid_root(forest, DemandVector::uniform(4)), NotATree);
}

TEST_CASE("centroid rooting invariant on random trees") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 2 + static_cast<int>(seed % 11);
    WeightedGraph t = gen_random_tree(n, 8, seed);
    DemandVector d = gen_random_demands(n, 6, 25, seed + 500);
    Vertex r = find_centroid_root(t, d);
    RootedTree rt = RootedTree::root_at(t, d, r);
    CHECK(rt.rooting_invariant_holds());
    CHECK(rt.subtree_demand[r] == d.total());
  }
}

TEST_CASE("rooted_tree_bal_cut path example") {
  WeightedGraph p3 = gen_path(3);
  DemandVector d3 = DemandVector::uniform(3);
  RootedTree rt = RootedTree::root_at(p3, d3, 1);
  TreeCutStats stats;
  VertexSet s = rooted_tree_bal_cut(rt, Weight(1), &stats);
  CHECK(s == VertexSet{0});
  CHECK(stats.early_terminated);
}

TEST_CASE("rooted_tree_bal_cut heavy star returns empty") {
  WeightedGraph st = star(5, Weight(10));
  DemandVector d = DemandVector::uniform(6);
  RootedTree rt = RootedTree::root_at(st, d, 0);
  CHECK(rooted_tree_bal_cut(rt, Weight(1)).empty());
}

TEST_CASE("tree cut output structure: antichain of complete subtrees") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    int n = 2 + static_cast<int>(seed % 11);
    WeightedGraph t = gen_random_tree(n, 8, seed * 3);
    DemandVector d = gen_random_demands(n, 6, 20, seed * 3 + 1);
    Vertex r = find_centroid_root(t, d);
    RootedTree rt = RootedTree::root_at(t, d, r);
    Weight psi_t = Weight(1 + static_cast<int>(seed % 3)) / 2;
    VertexSet s = rooted_tree_bal_cut(rt, psi_t);
    if (s.empty()) continue;
    std::vector<char> in_s = set_to_mask(n, s);
    CHECK(!in_s[r]);
    // Complete subtrees: a chosen vertex's children are chosen too.
    Weight parent_edge_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (v == r) continue;
      if (in_s[v] && !in_s[rt.parent[v]])
        parent_edge_sum += t.edge(rt.parent_edge[v]).w;
      if (!in_s[v]) continue;
      for (int id : t.incident(v)) {
        Vertex u = t.edge(id).u == v ? t.edge(id).v : t.edge(id).u;
        if (rt.parent[u] == v) CHECK(in_s[u]);
      }
    }
    // Boundary equals the sum over maximal chosen roots of their parent edge.
    CHECK(cut_weight(t, s) == parent_edge_sum);
  }
}

TEST_CASE("tree cut satisfies the sparsity and balance contract on random trees") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    int n = 2 + static_cast<int>(seed % 11);
    WeightedGraph t = gen_random_tree(n, 6, seed * 7);
    DemandVector d = gen_random_demands(n, 5, 20, seed * 7 + 2);
    Vertex r = find_centroid_root(t, d);
    RootedTree rt = RootedTree::root_at(t, d, r);
    for (Weight psi_t : {Weight(1) / 4, Weight(1) / 2, Weight(2)}) {
      VertexSet s = rooted_tree_bal_cut(rt, psi_t);
      Weight ds = d.of_set(s);
      Weight rest = d.total() - ds;
      if (!s.empty()) {
        REQUIRE(ds > 0);
        REQUIRE(rest > 0);
        // Sparsity at most 6 psi_T, exactly.
        CHECK(cut_weight(t, s) <= 6 * psi_t * std::min(ds, rest));
      }
      TreeStar star = brute_rooted_subtree_star(rt, psi_t);
      if (star.exists) {
        ++checked;
        CHECK(3 * std::min(ds, rest) >= star.demand);
      }
    }
  }
  CHECK(checked > 100);  // the corpus genuinely exercises the balance bound
}

TEST_CASE("tree cut operation count is linear") {
  std::vector<std::pair<int, std::uint64_t>> samples;
  for (int n : {64, 128, 256, 512, 1024, 2048}) {
    WeightedGraph t = gen_random_tree(n, 8, n);
    DemandVector d = DemandVector::uniform(n);
    RootedTree rt = RootedTree::root_at(t, d, find_centroid_root(t, d));
    TreeCutStats stats;
    rooted_tree_bal_cut(rt, Weight(1), &stats);
    samples.push_back({n, stats.operations});
  }
  // Log-log regression slope.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [n, ops] : samples) {
    double x = std::log2(n), y = std::log2(double(ops));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double k = samples.size();
  double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  CHECK(slope <= 1.1);
}
