#pragma once

#include <string>
#include <vector>

#include "xdecomp/config.hpp"
#include "xdecomp/graph.hpp"

namespace xdecomp {

// Parameter block of one recursion node. alpha_budget/beta_budget are the
// a priori schedule estimates; runtime certificates are compared against
// them and recorded in the trace.
struct BalCutParams {
  Weight psi;
  Weight psi_star;
  Weight b;
  int r = 1;        // remaining depth budget
  int r_total = 1;  // depth the schedule was built for
  int m0 = 0;       // edge count of the original input graph
  Weight alpha_budget = 1;
  Weight beta_budget = 1;
  int t = 1;
  int j_target = 1;

  // Preconditions of the balance guarantee. The cut returned is psi-sparse
  // regardless; only the balance bound needs these.
  bool guarantee_preconditions_hold() const {
    return psi >= 12 * beta_budget * psi_star && b >= 6;
  }
};

// Top-level schedule: psi = 12*beta*(3*alpha^2*beta)^r * psi_star,
// b = 6*3^r, t = ceil(m^(1/r) * log2(m)^c_t * log2(U)^2) clamped to t_cap.
BalCutParams theorem_parameters(int m, const Weight& capacity_ratio, int r,
                                const Weight& psi_star, const Config& cfg = {});

enum class CutProvenance { core_recursion, tree_cut, oracle_base, heuristic_base, empty };

std::string to_string(CutProvenance p);

struct MostBalancedCut {
  VertexSet side;  // the <= half-demand side; empty when nothing qualified
  Weight sparsity = 0;
  Weight demand = 0;
  CutProvenance provenance = CutProvenance::empty;
};

struct BalCutTraceNode {
  int level = 0;
  int n = 0;
  int m = 0;
  int t = 0;
  int j_target = 0;
  Weight beta_emp = 0;
  Weight alpha_max = 1;
  bool precondition_ok = true;
  bool size_bound_ok = true;
  CutProvenance provenance = CutProvenance::empty;
  Weight sparsity = 0;
  Weight min_side_demand = 0;
};
using BalCutTrace = std::vector<BalCutTraceNode>;

// Recursive most-balanced sparse cut: decomposes into j-trees, recurses on
// sparsified cores and runs the tree procedure on contracted peripheries,
// then keeps the qualifying candidate of maximum min-side demand. Every
// candidate's sparsity is recomputed from scratch in g before comparison.
MostBalancedCut weighted_bal_cut(const WeightedGraph& g, const DemandVector& d,
                                 const BalCutParams& params, const Config& cfg = {},
                                 BalCutTrace* trace = nullptr);

}  // namespace xdecomp
