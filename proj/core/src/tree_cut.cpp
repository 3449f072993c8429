#include "xdecomp/tree_cut.hpp"

#include <algorithm>

#include "xdecomp/errors.hpp"

namespace xdecomp {

RootedTree RootedTree::root_at(const WeightedGraph& tree, const DemandVector& d,
                               Vertex root) {
  if (!tree.is_tree()) throw NotATree("root_at: graph is not a connected tree");
  const int n = tree.n();
  RootedTree rt;
  rt.tree = tree;
  rt.root = root;
  rt.parent.assign(n, -1);
  rt.parent_edge.assign(n, -1);
  rt.order.reserve(n);
  rt.order.push_back(root);
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (size_t i = 0; i < rt.order.size(); ++i) {
    Vertex v = rt.order[i];
    for (int id : tree.incident(v)) {
      Vertex u = tree.edge(id).u == v ? tree.edge(id).v : tree.edge(id).u;
      if (!seen[u]) {
        seen[u] = 1;
        rt.parent[u] = v;
        rt.parent_edge[u] = id;
        rt.order.push_back(u);
      }
    }
  }
  rt.subtree_demand.assign(n, Weight(0));
  for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
    rt.subtree_demand[*it] += d[*it];
    if (rt.parent[*it] != -1) rt.subtree_demand[rt.parent[*it]] += rt.subtree_demand[*it];
  }
  rt.total_demand = rt.subtree_demand[root];
  return rt;
}

bool RootedTree::rooting_invariant_holds() const {
  for (Vertex v = 0; v < tree.n(); ++v) {
    if (v == root) continue;
    if (2 * subtree_demand[v] > total_demand) return false;
  }
  return true;
}

Vertex find_centroid_root(const WeightedGraph& tree, const DemandVector& d) {
  if (!tree.is_tree()) throw NotATree("find_centroid_root: not a connected tree");
  if (d.total() == 0) throw AllZeroDemand("find_centroid_root: zero total demand");
  if (tree.n() == 1) return 0;
  // Root anywhere, then walk towards any child whose subtree demand exceeds
  // half the total. Terminates at a demand centroid.
  RootedTree rt = RootedTree::root_at(tree, d, 0);
  Vertex v = 0;
  for (;;) {
    Vertex heavy = -1;
    for (int id : tree.incident(v)) {
      Vertex u = tree.edge(id).u == v ? tree.edge(id).v : tree.edge(id).u;
      if (rt.parent[u] != v) continue;
      if (2 * rt.subtree_demand[u] > rt.total_demand) {
        heavy = u;
        break;
      }
    }
    if (heavy == -1) break;
    // Re-rooting at `heavy` flips the parent relation between v and heavy;
    // maintain subtree demands incrementally.
    rt.subtree_demand[v] = rt.total_demand - rt.subtree_demand[heavy];
    rt.subtree_demand[heavy] = rt.total_demand;
    rt.parent[heavy] = -1;
    rt.parent[v] = heavy;
    v = heavy;
  }
  return v;
}

VertexSet rooted_tree_bal_cut(const RootedTree& rt, const Weight& psi_t,
                              TreeCutStats* stats) {
  const int n = rt.tree.n();
  TreeCutStats local;
  TreeCutStats& st = stats ? *stats : local;

  // Subtrees whose parent edge is cheap relative to the demand they carry.
  std::vector<char> in_x(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    ++st.operations;
    if (v == rt.root) continue;
    const Weight& w = rt.tree.edge(rt.parent_edge[v]).w;
    if (w <= 2 * psi_t * rt.subtree_demand[v]) in_x[v] = 1;
  }

  // Keep only subtree roots without an ancestor in X.
  std::vector<char> covered(n, 0);
  std::vector<Vertex> maximal;
  for (Vertex v : rt.order) {
    ++st.operations;
    if (rt.parent[v] != -1 && (covered[rt.parent[v]] || in_x[rt.parent[v]]))
      covered[v] = 1;
    if (in_x[v] && !covered[v]) maximal.push_back(v);
  }
  std::sort(maximal.begin(), maximal.end());

  std::vector<char> chosen(n, 0);
  Weight acc = 0;
  bool stop = false;
  for (Vertex u : maximal) {
    if (stop) break;
    // Collect the complete subtree below u.
    std::vector<Vertex> stack{u};
    chosen[u] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++st.operations;
      for (int id : rt.tree.incident(v)) {
        Vertex w = rt.tree.edge(id).u == v ? rt.tree.edge(id).v : rt.tree.edge(id).u;
        if (rt.parent[w] == v && !chosen[w]) {
          chosen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    acc += rt.subtree_demand[u];
    if (4 * acc >= rt.total_demand) {
      st.early_terminated = true;
      stop = true;
    }
  }
  return mask_to_set(chosen);
}

}  // namespace xdecomp
