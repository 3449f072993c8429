#include "xdecomp/balcut.hpp"

#include <algorithm>

#include "doctest.h"
#include "testutil.hpp"
#include "xdecomp/errors.hpp"
#include "xdecomp/generators.hpp"
#include "xdecomp/oracle.hpp"

using namespace xdecomp;
using namespace xdecomp::test;

namespace {

// Configuration that forces the full machinery on tiny graphs: shallow base
// case, few trees, small cores.
Config exercised_config() {
  Config cfg;
  cfg.balcut_base_edges = 2;
  cfg.t_cap = 6;
  cfg.core_log_exponent = 0;
  return cfg;
}

}  // namespace

TEST_CASE("theorem_parameters schedule") {
  BalCutParams p1 = theorem_parameters(20, Weight(4), 1, Weight(1) / 10);
  CHECK(p1.b == Weight(18));  // 6 * 3^1
  CHECK(p1.guarantee_preconditions_hold());
  CHECK(p1.t >= 1);
  CHECK(p1.j_target >= 1);

  BalCutParams p2 = theorem_parameters(30, Weight(8), 2, Weight(1) / 100);
  CHECK(p2.b == Weight(54));
  // Closed form recomputed independently.
  Weight expect = 12 * p2.beta_budget *
                  (3 * p2.alpha_budget * p2.alpha_budget * p2.beta_budget) *
                  (3 * p2.alpha_budget * p2.alpha_budget * p2.beta_budget) *
                  p2.psi_star;
  CHECK(p2.psi == expect);
  CHECK(p2.psi / p2.psi_star >= 12 * p2.beta_budget);
}

TEST_CASE("single edge returns one endpoint") {
  WeightedGraph g = single_edge(Weight(2));
  DemandVector d = DemandVector::uniform(2);
  BalCutParams params = theorem_parameters(1, Weight(1), 1, Weight(2));
  MostBalancedCut cut = weighted_bal_cut(g, d, params);
  REQUIRE(cut.side.size() == 1);
  CHECK(cut.sparsity == Weight(2));
  CHECK(cut.demand == Weight(1));
}

TEST_CASE("K4 with clamped psi returns empty, which the oracle validates") {
  WeightedGraph g = k4();
  DemandVector d = DemandVector::uniform(4);
  BalCutParams params = theorem_parameters(6, Weight(1), 1, Weight(1));
  params.psi = Weight(19) / 10;  // clamp below the K4 sparsest cut of 2
  CHECK(!params.guarantee_preconditions_hold());
  Config cfg = exercised_config();
  MostBalancedCut cut = weighted_bal_cut(g, d, params, cfg);
  CHECK(cut.side.empty());
  CHECK(cut.provenance == CutProvenance::empty);
  // Valid because no set is psi*-sparse either.
  CHECK(brute_most_balanced(g, d, Weight(1)).empty());
}

TEST_CASE("dumbbell finds a triangle-side cut") {
  WeightedGraph g = dumbbell();
  DemandVector d = DemandVector::uniform(6);
  Config cfg = exercised_config();
  BalCutParams params =
      theorem_parameters(g.m(), g.capacity_ratio(), 1, Weight(1) / 2, cfg);
  MostBalancedCut cut = weighted_bal_cut(g, d, params, cfg);
  REQUIRE(!cut.side.empty());
  CHECK(cut.demand == Weight(3));
  CHECK(cut.sparsity <= params.psi);
  VertexSet star_set = brute_most_balanced(g, d, Weight(1) / 2);
  CHECK(cut.demand * params.b >= d.of_set(star_set));
}

TEST_CASE("weighted_bal_cut guarantee against the oracle on random graphs") {
  Config cfg = exercised_config();
  int nonempty_outputs = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    int n = 5 + static_cast<int>(seed % 6);
    WeightedGraph g = gen_random_connected(n, 2 * n, 8, seed * 97);
    DemandVector d = gen_random_demands(n, 8, 20, seed * 97 + 1);
    OracleResult sparsest = brute_sparsest_cut(g, d);
    int r = 1 + static_cast<int>(seed % 2);
    for (Weight psi_star : {sparsest.best_value / 2, sparsest.best_value,
                            2 * sparsest.best_value}) {
      if (psi_star == 0) continue;
      BalCutParams params = theorem_parameters(g.m(), g.capacity_ratio(), r, psi_star, cfg);
      BalCutTrace trace;
      MostBalancedCut cut = weighted_bal_cut(g, d, params, cfg, &trace);

      VertexSet star_set = brute_most_balanced(g, d, psi_star);
      Weight star_mass = d.of_set(star_set);
      if (!cut.side.empty()) {
        ++nonempty_outputs;
        Weight in = d.of_set(cut.side);
        Weight out = d.total() - in;
        REQUIRE(in <= out);
        // Condition (1): exact sparsity bound, recomputed from scratch.
        CHECK(cut_weight(g, cut.side) <= params.psi * in);
        CHECK(cut.sparsity == cut_weight(g, cut.side) / in);
        // Condition (2): balance against the oracle's most balanced set.
        CHECK(cut.demand * params.b >= star_mass);
      } else {
        CHECK(star_mass == 0);
      }
      // Trace sanity: depth bounded by r, preconditions recorded true.
      for (const BalCutTraceNode& node : trace) {
        CHECK(node.level <= r);
        CHECK(node.precondition_ok);
      }
    }
  }
  CHECK(nonempty_outputs > 30);
}

TEST_CASE("weighted_bal_cut errors") {
  WeightedGraph disc =
      WeightedGraph::from_edges(4, {{0, 1, Weight(1)}, {2, 3, Weight(1)}});
  BalCutParams params = theorem_parameters(2, Weight(1), 1, Weight(1));
  CHECK_THROWS_AS(weighted_bal_cut(disc, DemandVector::uniform(4), params), Disconnected);
  DemandVector zeros(std::vector<Weight>(4, Weight(0)));
  CHECK_THROWS_AS(weighted_bal_cut(k4(), zeros, params), AllZeroDemand);
}
