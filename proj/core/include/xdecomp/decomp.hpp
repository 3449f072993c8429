#pragma once

#include <string>
#include <vector>

#include "xdecomp/config.hpp"
#include "xdecomp/graph.hpp"
#include "xdecomp/oracle.hpp"
#include "xdecomp/prune.hpp"

namespace xdecomp {

struct PartCertificate {
  enum class Kind { prune_certified, oracle_verified, zero_demand, singleton };
  Kind kind = Kind::prune_certified;
  bool strong = false;         // exact sparsity >= psi established
  Weight weak_threshold = 0;   // always-valid certified threshold
};

struct Decomposition {
  std::vector<VertexSet> parts;
  Weight deleted_edge_weight = 0;  // each inter-part edge counted once
  Weight psi_achieved = 0;
  int iterations = 0;
  std::vector<PartCertificate> per_part_certificates;
  Weight alpha_emp_max = 1;
  double c_used = 0;
  int restarts = 0;
  // Max active cluster demand after each iteration, for the progress check.
  std::vector<Weight> active_demand_history;
};

// Repeated balanced-cut-or-prune over active clusters until every part is
// certified. Disconnected inputs are split into components first.
Decomposition expander_decomposition(const WeightedGraph& g, const DemandVector& d,
                                     const Weight& eps, int r, const Config& cfg = {},
                                     BalCutTrace* trace = nullptr);

// Exact budget check plus per-part oracle verification.
DecompositionReport verify_decomposition(const WeightedGraph& g, const DemandVector& d,
                                         const Decomposition& dec, const Weight& eps,
                                         const Weight& psi,
                                         int cap = Config().oracle_cap);

}  // namespace xdecomp
