#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xdecomp/config.hpp"
#include "xdecomp/graph.hpp"

namespace xdecomp {

struct OracleResult {
  VertexSet best_set;
  Weight best_value;
  std::uint64_t enumerated = 0;
};

// Exact minimum d-sparsity over all S with 0 < d(S) < d(V), by full subset
// enumeration. Ties break toward the lexicographically smallest set.
OracleResult brute_sparsest_cut(const WeightedGraph& g, const DemandVector& d,
                                int cap = Config().oracle_cap);

// The set maximizing d(S) over all S with w(S, V\S) <= psi_star * min{d(S),
// d(V\S)} and d(S) <= d(V)/2; empty when no demand-carrying set qualifies.
VertexSet brute_most_balanced(const WeightedGraph& g, const DemandVector& d,
                              const Weight& psi_star, int cap = Config().oracle_cap);

struct PartReport {
  enum class Status { verified, unverified, vacuous };
  Status status;
  std::optional<Weight> sparsity;  // absent when vacuous or unverified
  bool ok;                         // sparsity >= psi (vacuous parts pass)
};

struct DecompositionReport {
  bool is_partition = false;
  Weight inter_cluster_weight = 0;  // each crossing edge counted once
  bool budget_ok = false;
  std::vector<PartReport> parts;
  bool all_parts_ok = false;
  bool valid() const { return is_partition && budget_ok && all_parts_ok; }
  std::string summary() const;
};

// Checks both conditions of the weighted expander decomposition definition
// exactly; parts above the oracle cap are reported unverified.
DecompositionReport brute_verify_decomposition(const WeightedGraph& g,
                                               const DemandVector& d,
                                               const std::vector<VertexSet>& parts,
                                               const Weight& eps, const Weight& psi,
                                               int cap = Config().oracle_cap);

// Enumerates every proper cut (by demand) and calls fn(mask, boundary,
// demand_in). Used by verification paths that need all cuts of a small graph.
void for_each_subset(const WeightedGraph& g, const DemandVector& d,
                     const std::function<void(const std::vector<char>&, const Weight&,
                                              const Weight&)>& fn,
                     int cap);

}  // namespace xdecomp
