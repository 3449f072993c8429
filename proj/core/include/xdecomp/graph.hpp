#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "xdecomp/errors.hpp"
#include "xdecomp/weight.hpp"

namespace xdecomp {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted, unique

struct Edge {
  Vertex u;
  Vertex v;
  Weight w;
};

// Positively weighted undirected simple graph on dense vertex ids 0..n-1.
// Parallel edges are merged by summing weights and self-loops are rejected
// at construction. Immutable afterwards; safe to share across threads.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  static WeightedGraph from_edges(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }
  // Ids of edges incident to v.
  const std::vector<int>& incident(Vertex v) const { return adjacency_[v]; }

  Weight total_weight() const;
  Weight min_weight() const;
  Weight max_weight() const;
  // Capacity ratio U = max weight / min weight; 1 for edgeless graphs.
  Weight capacity_ratio() const;

  Weight weighted_degree(Vertex v) const;
  bool is_connected() const;
  bool is_tree() const { return m() == n_ - 1 && is_connected(); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// Non-negative per-vertex demands with cached total.
class DemandVector {
 public:
  DemandVector() = default;
  explicit DemandVector(std::vector<Weight> d);
  static DemandVector uniform(int n, const Weight& value = Weight(1));
  static DemandVector degrees(const WeightedGraph& g);

  int n() const { return static_cast<int>(d_.size()); }
  const Weight& operator[](Vertex v) const { return d_[v]; }
  const Weight& total() const { return total_; }
  Weight of_set(const VertexSet& s) const;
  bool all_zero() const { return total_ == 0; }

  // Demands re-indexed through new-id -> old-id.
  DemandVector mapped(const std::vector<Vertex>& orig_of) const;

 private:
  std::vector<Weight> d_;
  Weight total_ = 0;
};

// One side of a cut together with the quantities every contract compares.
struct Cut {
  VertexSet side;
  Weight boundary_weight;
  Weight demand_in;
  Weight demand_out;
  // Defined only when 0 < d(S) < d(V).
  std::optional<Weight> sparsity;

  static Cut of(const WeightedGraph& g, const DemandVector& d, const VertexSet& side);
};

// Total weight of edges crossing (s, V \ s). Empty and full sets give 0.
Weight cut_weight(const WeightedGraph& g, const VertexSet& s);
Weight cut_weight_mask(const WeightedGraph& g, const std::vector<char>& in_side);

// w(E(s, V\s)) / min{d(s), d(V\s)}. Throws DegenerateSide when the cut
// carries no demand information.
Weight d_sparsity(const WeightedGraph& g, const DemandVector& d, const VertexSet& s);

struct Subgraph {
  WeightedGraph graph;
  std::vector<Vertex> orig_of;  // new id -> old id
  std::vector<Vertex> new_of;   // old id -> new id, -1 if absent
};

// Subgraph induced by a nonempty vertex set, with the id remapping tables.
Subgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s);

struct Contraction {
  WeightedGraph graph;
  std::vector<Vertex> new_of;  // old id -> new id
};

// Merges each group into one super-vertex; parallel edges are summed and
// self-loops dropped. Vertices outside all groups keep singleton identity.
Contraction contract(const WeightedGraph& g, const std::vector<VertexSet>& groups);

std::vector<VertexSet> connected_components(const WeightedGraph& g);

VertexSet complement_set(int n, const VertexSet& s);
std::vector<char> set_to_mask(int n, const VertexSet& s);
VertexSet mask_to_set(const std::vector<char>& mask);

struct NormalizedGraph {
  WeightedGraph graph;
  Weight scale;  // original weight = normalized weight * scale
};
struct NormalizedDemands {
  DemandVector demands;
  Weight scale;
};

// Rescales so the minimum edge weight (minimum nonzero demand) becomes 1.
NormalizedGraph normalize_graph(const WeightedGraph& g);
NormalizedDemands normalize_demands(const DemandVector& d);

}  // namespace xdecomp
