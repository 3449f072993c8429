#pragma once

#include <string>
#include <vector>

#include "xdecomp/config.hpp"
#include "xdecomp/graph.hpp"

namespace xdecomp {

// A graph that is the union of a core on at most j vertices and a peripheral
// forest in which every component contains exactly one core vertex. Vertex
// ids coincide with the source graph's ids.
struct JTree {
  WeightedGraph graph;
  VertexSet core;                 // sorted
  std::vector<char> is_core;      // by vertex id
  std::vector<Vertex> tree_of;    // v -> core vertex of v's peripheral tree
  std::vector<int> forest_edges;  // edge ids in graph
  int core_edge_count = 0;
};

struct JTreeItem {
  Weight lambda;
  JTree jtree;
  // Embedding of the source graph: per source edge id, its routing path as a
  // vertex list in jtree.graph. Empty when paths were not stored (large n).
  std::vector<std::vector<Vertex>> embed_paths;
};

struct JTreeDistribution {
  std::vector<JTreeItem> items;
  Weight beta_emp = 0;       // measured average-embedding congestion at cut level
  bool beta_sampled = false;  // true when beta_emp came from sampled cuts only
  bool paths_stored = false;
  int t() const { return static_cast<int>(items.size()); }
};

// Builds t j-trees with core size <= j_target, each hosting a congestion-1
// embedding of g (so every cut of every j-tree dominates the corresponding
// cut of g exactly). Demands steer core placement only.
JTreeDistribution decompose(const WeightedGraph& g, const DemandVector& d, int t,
                            int j_target, const Config& cfg = {});

struct JTreeReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Structural check of the core/forest invariants, independent of the
// construction (union-find based).
JTreeReport verify_jtree(const JTree& jt);

// Max over host edges of (total guest weight routed through it) / host
// weight. 1 for identity embeddings.
Weight verify_embedding_congestion(const WeightedGraph& g,
                                   const std::vector<std::vector<Vertex>>& paths,
                                   const WeightedGraph& host);

struct CoreAndTree {
  // Core graph H with the peripheral forest contracted into its core
  // vertices; demands aggregate each peripheral tree.
  WeightedGraph core_graph;
  DemandVector core_demands;
  std::vector<Vertex> core_orig_of;  // H id -> source id
  std::vector<Vertex> core_new_of;   // source id -> H id (-1 if not core)

  // Tree T with the whole core contracted into a single vertex k.
  WeightedGraph tree;
  DemandVector tree_demands;
  Vertex core_vertex = -1;           // id of k in tree
  std::vector<Vertex> tree_orig_of;  // tree id -> source id (-1 at k)
  std::vector<Vertex> tree_new_of;   // source id -> tree id (core -> k)
};

CoreAndTree split_core_and_tree(const JTree& jt, const DemandVector& d);

}  // namespace xdecomp
