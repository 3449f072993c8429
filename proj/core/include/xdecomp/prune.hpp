#pragma once

#include <string>
#include <vector>

#include "xdecomp/balcut.hpp"
#include "xdecomp/config.hpp"
#include "xdecomp/graph.hpp"

namespace xdecomp {

struct TrimParams {
  Weight psi;      // 0 < psi < 1
  Weight z;        // promise: every psi-sparse partition of V' has min side <= z
  Weight z_prime;  // 0 < z' < z
  int r = 1;
  double c1 = 1.0;
};

struct TrimIteration {
  Weight removed_demand;
  Weight boundary_weight;
  bool component_peel = false;  // zero-boundary component, not a wbc cut
};

struct TrimResult {
  enum class Exit { certified_small, balanced };
  VertexSet x;  // d(x) <= d(y)
  VertexSet y;
  Weight boundary_weight;  // w(E_g(x, y)), recomputed exactly
  Exit exit = Exit::certified_small;
  // Certificate of the certified_small exit: every cut of y at sparsity
  // <= certified_threshold has min demand side <= certified_bound.
  Weight certified_threshold = 0;
  Weight certified_bound = 0;
  int wbc_iterations = 0;
  std::vector<TrimIteration> iterations;
  // Set when termination was driven by the residual-demand floor, whose
  // interaction with the balanced exit is threshold-sensitive.
  bool residual_floor_hit = false;
};

// Iterative unbalanced-cut removal: repeatedly takes a most-balanced sparse
// cut of the residual graph and deletes it, stopping either when the cut is
// tiny (certifying y has only very unbalanced sparse cuts) or when the
// removals reach a third of the demand. When verify_promise is set and the
// instance is oracle-sized, the promise precondition is checked exactly and
// PromiseViolated is thrown if it fails.
TrimResult trim(const WeightedGraph& g, const DemandVector& d, const VertexSet& v_prime,
                const TrimParams& tp, const Config& cfg = {},
                BalCutTrace* trace = nullptr, bool verify_promise = false);

struct PruneResult {
  enum class Case { cut, prune };
  VertexSet a;
  VertexSet b;
  Case kase = Case::prune;
  Weight boundary_weight = 0;
  Weight alpha_emp = 1;  // achieved w / (psi * min{d(a), d(b)})
  // Strong certificate: sparsity of g[a] at least psi, established by exact
  // oracle polish (possible only at oracle scale).
  bool strong_certified = false;
  // Weak certificate threshold from the final trim, always valid.
  Weight certified_threshold = 0;
  bool per_side_bound_ok = true;  // w <= alpha_schedule * psi * min demand
  int outer_iterations = 0;
  std::vector<TrimResult> trims;
  std::string certificate_text;
};

// Balanced-cut-or-prune: either a cut with both demand sides >= d(V)/3, or a
// partition whose large side is certified free of psi-sparse cuts. Requires
// weights >= 1 and positive demands >= 1 (normalized input).
PruneResult bal_cut_prune(const WeightedGraph& g, const DemandVector& d,
                          const Weight& psi, int r, const Config& cfg = {},
                          BalCutTrace* trace = nullptr);

// The polylog gap between the working sparsity and the certified threshold;
// also the schedule ratio consumed by trim.
Weight prune_gap(int m, const Weight& capacity_ratio, int r, const Config& cfg);

// Schedule bound on the achievable approximation factor of bal_cut_prune.
Weight prune_alpha_schedule(int m, const Weight& capacity_ratio, int r,
                            const Config& cfg);

std::string serialize_prune_certificate(const PruneResult& result);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

// Re-verifies a PruneResult against the graph with exact arithmetic and the
// oracle (where the parts are small enough).
CertificateCheck verify_prune_result(const WeightedGraph& g, const DemandVector& d,
                                     const Weight& psi, const PruneResult& result,
                                     const Config& cfg = {});

}  // namespace xdecomp
