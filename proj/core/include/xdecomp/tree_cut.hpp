#pragma once

#include <cstdint>
#include <vector>

#include "xdecomp/graph.hpp"

namespace xdecomp {

// A connected tree rooted so that every subtree below a child of the root
// carries at most half of the total demand.
struct RootedTree {
  WeightedGraph tree;
  Vertex root = -1;
  std::vector<Vertex> parent;       // parent[root] = -1
  std::vector<int> parent_edge;     // edge id towards parent, -1 at root
  std::vector<Vertex> order;        // BFS order, parents before children
  std::vector<Weight> subtree_demand;
  Weight total_demand = 0;

  static RootedTree root_at(const WeightedGraph& tree, const DemandVector& d, Vertex root);
  bool rooting_invariant_holds() const;
};

// Vertex at which every child subtree has demand <= d(V)/2; always exists.
Vertex find_centroid_root(const WeightedGraph& tree, const DemandVector& d);

struct TreeCutStats {
  std::uint64_t operations = 0;  // node/edge visits, for the linearity check
  bool early_terminated = false;
};

// Greedy union of low-sparsity rooted subtrees. The output is a union of
// complete subtrees none of which contains the root; accumulation stops as
// soon as d(S) >= d(V)/4.
VertexSet rooted_tree_bal_cut(const RootedTree& rt, const Weight& psi_t,
                              TreeCutStats* stats = nullptr);

}  // namespace xdecomp
