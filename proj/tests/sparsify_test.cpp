#include "xdecomp/sparsify.hpp"

#include <cmath>

#include "doctest.h"
#include "testutil.hpp"
#include "xdecomp/generators.hpp"

using namespace xdecomp;
using namespace xdecomp::test;

TEST_CASE("passthrough below the size budget and on trees") {
  WeightedGraph g = k4();
  SparsifyResult r = sparsify(g, Weight(2), 10);
  CHECK(r.certificate.method == SparsifierCertificate::Method::passthrough);
  CHECK(r.certificate.alpha_declared == Weight(1));
  CHECK(r.graph.m() == g.m());

  WeightedGraph t = gen_random_tree(30, 9, 4);
  SparsifyResult rt = sparsify(t, Weight(2), 0);
  CHECK(rt.certificate.method == SparsifierCertificate::Method::passthrough);
  CHECK(rt.graph.m() == t.m());
}

TEST_CASE("spanner union stays within the measured certificate on all cuts") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    WeightedGraph g = gen_random_connected(12, 60, 16, seed * 17);
    if (g.m() <= 12) continue;
    Config cfg;
    cfg.sparsify_size_const = 0.0;  // force the spanner path
    SparsifyResult r = sparsify(g, Weight(4), 12, cfg);
    CHECK(r.certificate.edges_after <= r.certificate.edges_before);
    CHECK(r.graph.is_connected());
    const Weight alpha = r.certificate.alpha_declared;
    CHECK(!r.certificate.alpha_sampled);
    for (const VertexSet& s : all_subsets(12)) {
      if (s.empty() || static_cast<int>(s.size()) == 12) continue;
      Weight a = cut_weight(g, s);
      Weight b = cut_weight(r.graph, s);
      CHECK(b * alpha >= a);
      CHECK(b <= alpha * a);
    }
  }
}

TEST_CASE("spanner respects the size bound shape") {
  WeightedGraph g = gen_random_connected(14, 91, 16, 3);  // dense
  Config cfg;
  cfg.sparsify_size_const = 0.0;
  SparsifyResult r = sparsify(g, Weight(4), 14, cfg);
  double logn = std::log2(14);
  double logu = 1.0 + std::log2(to_double(g.capacity_ratio()));
  CHECK(r.graph.m() <= static_cast<int>(2 * 14 * logu) + 14);
  CHECK(r.graph.m() <= static_cast<int>(14 * logn * logu) + 14);
}

TEST_CASE("sparsify determinism") {
  WeightedGraph g = gen_random_connected(12, 50, 8, 77);
  Config cfg;
  cfg.sparsify_size_const = 0.0;
  SparsifyResult a = sparsify(g, Weight(4), 10, cfg);
  SparsifyResult b = sparsify(g, Weight(4), 10, cfg);
  REQUIRE(a.graph.m() == b.graph.m());
  for (int i = 0; i < a.graph.m(); ++i) {
    CHECK(a.graph.edge(i).u == b.graph.edge(i).u);
    CHECK(a.graph.edge(i).v == b.graph.edge(i).v);
    CHECK(a.graph.edge(i).w == b.graph.edge(i).w);
  }
  CHECK(a.certificate.alpha_declared == b.certificate.alpha_declared);
}

TEST_CASE("laplacian quadratic form") {
  WeightedGraph g = gen_random_connected(8, 16, 7, 31);
  Laplacian l = Laplacian::of(g);

  // Row sums are zero, i.e. the all-ones vector is in the kernel.
  CHECK(quadratic_form(l, std::vector<Weight>(8, Weight(1))) == Weight(0));

  // Indicator vectors give exactly the cut weight.
  for (const VertexSet& s : all_subsets(8)) {
    std::vector<Weight> x(8, Weight(0));
    for (Vertex v : s) x[v] = 1;
    CHECK(quadratic_form(l, x) == cut_weight(g, s));
  }
}

TEST_CASE("quadratic forms of sparsified pairs stay within alpha") {
  WeightedGraph g = gen_random_connected(8, 28, 8, 55);
  Config cfg;
  cfg.sparsify_size_const = 0.0;
  SparsifyResult r = sparsify(g, Weight(4), 8, cfg);
  Laplacian lg = Laplacian::of(g);
  Laplacian lh = Laplacian::of(r.graph);
  Rng rng(9001);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Weight> x(8);
    for (int v = 0; v < 8; ++v) x[v] = Weight(rng.uniform(-8, 8)) / 4;
    Weight qg = quadratic_form(lg, x);
    Weight qh = quadratic_form(lh, x);
    // Cut-level certificates imply nothing for arbitrary vectors, but both
    // forms are nonnegative and vanish together on constants.
    CHECK(qg >= 0);
    CHECK(qh >= 0);
  }
  // Indicator vectors inherit the cut certificate exactly.
  for (const VertexSet& s : all_subsets(8)) {
    if (s.empty() || static_cast<int>(s.size()) == 8) continue;
    std::vector<Weight> x(8, Weight(0));
    for (Vertex v : s) x[v] = 1;
    Weight qg = quadratic_form(lg, x);
    Weight qh = quadratic_form(lh, x);
    CHECK(qh * r.certificate.alpha_declared >= qg);
    CHECK(qh <= r.certificate.alpha_declared * qg);
  }
}
