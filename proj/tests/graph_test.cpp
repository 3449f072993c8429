#include "xdecomp/graph.hpp"

#include "doctest.h"
#include "testutil.hpp"
#include "xdecomp/errors.hpp"
#include "xdecomp/generators.hpp"

using namespace xdecomp;
using namespace xdecomp::test;

TEST_CASE("cut_weight on fixtures") {
  WeightedGraph g = c4();
  CHECK(cut_weight(g, {0, 1}) == Weight(2));
  CHECK(cut_weight(g, {}) == Weight(0));
  CHECK(cut_weight(g, {0, 1, 2, 3}) == Weight(0));
  CHECK(cut_weight(g, {0, 2}) == Weight(4));
}

TEST_CASE("cut_weight agrees with an independent per-edge scan and is symmetric") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    WeightedGraph g = gen_random_connected(8, 16, 9, seed);
    for (const VertexSet& s : all_subsets(8)) {
      Weight w = cut_weight(g, s);
      CHECK(w == cut_weight_reference(g, s));
      CHECK(w == cut_weight(g, complement_set(8, s)));
    }
  }
}

TEST_CASE("d_sparsity formula and errors") {
  WeightedGraph e = single_edge(Weight(3));
  DemandVector d = DemandVector::uniform(2);
  CHECK(d_sparsity(e, d, {0}) == Weight(3));

  WeightedGraph g = c4();
  DemandVector d4 = DemandVector::uniform(4);
  CHECK(d_sparsity(g, d4, {0, 2}) == Weight(2));

  CHECK_THROWS_AS(d_sparsity(g, d4, {}), DegenerateSide);
  CHECK_THROWS_AS(d_sparsity(g, d4, {0, 1, 2, 3}), DegenerateSide);
  DemandVector concentrated(std::vector<Weight>{Weight(1), Weight(0), Weight(0), Weight(0)});
  CHECK_THROWS_AS(d_sparsity(g, concentrated, {0}), DegenerateSide);
}

TEST_CASE("d_sparsity scaling behaviour") {
  WeightedGraph g = gen_random_connected(9, 18, 7, 42);
  DemandVector d = gen_random_demands(9, 8, 20, 43);
  VertexSet s = {0, 2, 5};
  VertexSet s2 = {1, 3};
  Weight base = d_sparsity(g, d, s);
  Weight base2 = d_sparsity(g, d, s2);

  // Only demand ratios matter: uniform scaling rescales every sparsity by
  // the same factor, so comparisons between cuts are unchanged.
  std::vector<Weight> scaled;
  for (Vertex v = 0; v < 9; ++v) scaled.push_back(d[v] * 7);
  DemandVector d7(scaled);
  CHECK(d_sparsity(g, d7, s) * 7 == base);
  CHECK(d_sparsity(g, d7, s) * base2 == d_sparsity(g, d7, s2) * base);

  // Edge-weight scaling multiplies it.
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.w *= 5;
  WeightedGraph g5 = WeightedGraph::from_edges(9, edges);
  CHECK(d_sparsity(g5, d, s) == base * 5);
}

TEST_CASE("conductance specialization") {
  WeightedGraph g = gen_random_connected(8, 14, 1, 7);
  DemandVector deg = DemandVector::degrees(g);
  for (const VertexSet& s : all_subsets(8)) {
    Weight in = deg.of_set(s);
    if (in == 0 || in == deg.total()) continue;
    Weight cond = cut_weight(g, s) / std::min(in, deg.total() - in);
    CHECK(d_sparsity(g, deg, s) == cond);
  }
}

TEST_CASE("induced_subgraph basics") {
  WeightedGraph g = gen_random_connected(9, 20, 5, 11);
  VertexSet all(9);
  for (int i = 0; i < 9; ++i) all[i] = i;
  Subgraph same = induced_subgraph(g, all);
  CHECK(same.graph.m() == g.m());
  CHECK(same.graph.total_weight() == g.total_weight());

  Subgraph single = induced_subgraph(g, {4});
  CHECK(single.graph.n() == 1);
  CHECK(single.graph.m() == 0);

  VertexSet s = {1, 3, 4, 7, 8};
  Subgraph sub = induced_subgraph(g, s);
  int expected = 0;
  for (const Edge& e : g.edges())
    if (sub.new_of[e.u] != -1 && sub.new_of[e.v] != -1) ++expected;
  CHECK(sub.graph.m() == expected);
  for (const Edge& e : sub.graph.edges()) {
    Weight orig = 0;
    for (const Edge& f : g.edges()) {
      if ((f.u == sub.orig_of[e.u] && f.v == sub.orig_of[e.v]) ||
          (f.v == sub.orig_of[e.u] && f.u == sub.orig_of[e.v]))
        orig = f.w;
    }
    CHECK(e.w == orig);
  }
}

TEST_CASE("contract merges weights and drops loops") {
  // Single group of size 1: isomorphic.
  WeightedGraph g = c4();
  Contraction same = contract(g, {{2}});
  CHECK(same.graph.n() == 4);
  CHECK(same.graph.m() == 4);
  CHECK(same.graph.total_weight() == g.total_weight());

  // Both endpoints of the only edge.
  Contraction point = contract(single_edge(), {{0, 1}});
  CHECK(point.graph.n() == 1);
  CHECK(point.graph.m() == 0);

  // Triangle with one pair contracted: 2 vertices, weights summed.
  WeightedGraph tri = WeightedGraph::from_edges(
      3, {{0, 1, Weight(5)}, {1, 2, Weight(3)}, {0, 2, Weight(2)}});
  Contraction c = contract(tri, {{0, 1}});
  CHECK(c.graph.n() == 2);
  CHECK(c.graph.m() == 1);
  CHECK(c.graph.edge(0).w == Weight(5));  // 3 + 2
}

TEST_CASE("contraction conserves non-internal weight") {
  WeightedGraph g = gen_random_connected(10, 24, 6, 99);
  std::vector<VertexSet> groups = {{0, 1, 2}, {5, 6}};
  Weight internal = 0;
  for (const Edge& e : g.edges()) {
    auto in = [&](const VertexSet& grp, Vertex v) {
      return std::find(grp.begin(), grp.end(), v) != grp.end();
    };
    for (const VertexSet& grp : groups)
      if (in(grp, e.u) && in(grp, e.v)) internal += e.w;
  }
  Contraction c = contract(g, groups);
  CHECK(c.graph.total_weight() == g.total_weight() - internal);
}

TEST_CASE("graph construction rules") {
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 0, Weight(1)}}), Error);
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 1, Weight(0)}}), Error);
  WeightedGraph merged =
      WeightedGraph::from_edges(2, {{0, 1, Weight(2)}, {1, 0, Weight(3)}});
  CHECK(merged.m() == 1);
  CHECK(merged.edge(0).w == Weight(5));
  CHECK(merged.capacity_ratio() == Weight(1));
}

TEST_CASE("normalization establishes min weight 1 and keeps the scale") {
  WeightedGraph g = WeightedGraph::from_edges(
      3, {{0, 1, Weight(6)}, {1, 2, Weight(4)}, {0, 2, Weight(10)}});
  NormalizedGraph norm = normalize_graph(g);
  CHECK(norm.scale == Weight(4));
  CHECK(norm.graph.min_weight() == Weight(1));
  CHECK(norm.graph.capacity_ratio() == Weight(10) / Weight(4));
  for (int i = 0; i < g.m(); ++i)
    CHECK(norm.graph.edge(i).w * norm.scale == g.edge(i).w);

  DemandVector d(std::vector<Weight>{Weight(0), Weight(6), Weight(9)});
  NormalizedDemands nd = normalize_demands(d);
  CHECK(nd.scale == Weight(6));
  CHECK(nd.demands[0] == Weight(0));
  CHECK(nd.demands[1] == Weight(1));
  CHECK(nd.demands[2] == Weight(3) / Weight(2));
}

TEST_CASE("connected_components") {
  WeightedGraph g = WeightedGraph::from_edges(
      5, {{0, 1, Weight(1)}, {3, 4, Weight(1)}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet{0, 1});
  CHECK(comps[1] == VertexSet{2});
  CHECK(comps[2] == VertexSet{3, 4});
}
