#include "xdecomp/balcut.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>

#include "xdecomp/errors.hpp"
#include "xdecomp/jtree.hpp"
#include "xdecomp/oracle.hpp"
#include "xdecomp/sparsify.hpp"
#include "xdecomp/tree_cut.hpp"

namespace xdecomp {

namespace {

int compute_tree_count(int m0, int r_total, int m, const Weight& capacity_ratio,
                       const Config& cfg) {
  double logm = std::log2(std::max(m, 2));
  double logu = std::log2(std::max(to_double(capacity_ratio), 2.0));
  double value = std::pow(std::max(m0, 1), 1.0 / std::max(r_total, 1)) *
                 std::pow(logm, cfg.t_log_exponent) * logu * logu;
  int t = static_cast<int>(std::ceil(value));
  return std::clamp(t, 1, cfg.t_cap);
}

int compute_core_target(int m, int t, const Config& cfg) {
  double logm = std::log2(std::max(m, 2));
  double value = std::ceil(m * std::pow(logm, cfg.core_log_exponent) / std::max(t, 1));
  return std::max(1, static_cast<int>(value));
}

struct Candidate {
  VertexSet side;  // min-demand side
  Weight min_demand;
  Weight sparsity;
  CutProvenance provenance;
};

// Qualifies the set against psi in g, normalizing to the min-demand side.
std::optional<Candidate> evaluate(const WeightedGraph& g, const DemandVector& d,
                                  const VertexSet& s, const Weight& psi,
                                  CutProvenance provenance) {
  if (s.empty() || static_cast<int>(s.size()) >= g.n()) return std::nullopt;
  Weight in = d.of_set(s);
  Weight out = d.total() - in;
  Weight mn = std::min(in, out);
  if (mn == 0) return std::nullopt;
  Weight w = cut_weight(g, s);
  if (w > psi * mn) return std::nullopt;
  Candidate c;
  c.side = in <= out ? s : complement_set(g.n(), s);
  c.min_demand = mn;
  c.sparsity = w / mn;
  c.provenance = provenance;
  return c;
}

bool better(const Candidate& a, const Candidate& b) {
  if (a.min_demand != b.min_demand) return a.min_demand > b.min_demand;
  if (a.sparsity != b.sparsity) return a.sparsity < b.sparsity;
  return std::lexicographical_compare(a.side.begin(), a.side.end(), b.side.begin(),
                                      b.side.end());
}

// Deterministic stand-in for the oracle beyond its cap: the best qualifying
// cut among all rooted subtrees of a max-weight spanning tree plus all
// singletons, with boundaries evaluated exactly in g.
MostBalancedCut heuristic_most_balanced(const WeightedGraph& g, const DemandVector& d,
                                        const Weight& psi) {
  struct Item {
    VertexSet side;
    Weight min_demand;
    Weight sparsity;
  };
  std::optional<Item> best;
  auto consider = [&](const VertexSet& s, const Weight& w) {
    Weight in = d.of_set(s);
    Weight out = d.total() - in;
    Weight mn = std::min(in, out);
    if (mn == 0 || w > psi * mn) return;
    Item item{in <= out ? s : complement_set(g.n(), s), mn, w / mn};
    if (!best || item.min_demand > best->min_demand ||
        (item.min_demand == best->min_demand && item.sparsity < best->sparsity))
      best = std::move(item);
  };

  for (Vertex v = 0; v < g.n(); ++v) {
    Weight w = 0;
    for (int id : g.incident(v)) w += g.edge(id).w;
    consider({v}, w);
  }

  // Subtree cuts of a max-weight spanning tree; boundary of every subtree in
  // one pass via the path-difference trick.
  std::vector<int> ids(g.m());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    if (g.edge(a).w != g.edge(b).w) return g.edge(a).w > g.edge(b).w;
    return a < b;
  });
  std::vector<int> uf(g.n());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<Edge> tree_edges;
  for (int id : ids) {
    int a = find(g.edge(id).u), b = find(g.edge(id).v);
    if (a != b) {
      uf[a] = b;
      tree_edges.push_back(g.edge(id));
    }
  }
  WeightedGraph tree = WeightedGraph::from_edges(g.n(), tree_edges);
  RootedTree rt = RootedTree::root_at(tree, d, 0);

  std::vector<int> depth(g.n(), 0);
  for (Vertex v : rt.order)
    if (rt.parent[v] != -1) depth[v] = depth[rt.parent[v]] + 1;
  std::vector<Weight> diff(g.n(), Weight(0));
  for (const Edge& e : g.edges()) {
    diff[e.u] += e.w;
    diff[e.v] += e.w;
    Vertex a = e.u, b = e.v;
    while (depth[a] > depth[b]) a = rt.parent[a];
    while (depth[b] > depth[a]) b = rt.parent[b];
    while (a != b) {
      a = rt.parent[a];
      b = rt.parent[b];
    }
    diff[a] -= 2 * e.w;
  }
  std::vector<Weight> boundary = diff;
  for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it)
    if (rt.parent[*it] != -1) boundary[rt.parent[*it]] += boundary[*it];

  for (Vertex u = 0; u < g.n(); ++u) {
    if (u == rt.root) continue;
    // collect subtree of u
    VertexSet side;
    std::vector<Vertex> stack{u};
    std::vector<char> mark(g.n(), 0);
    mark[u] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      side.push_back(v);
      for (int id : tree.incident(v)) {
        Vertex w2 = tree.edge(id).u == v ? tree.edge(id).v : tree.edge(id).u;
        if (rt.parent[w2] == v && !mark[w2]) {
          mark[w2] = 1;
          stack.push_back(w2);
        }
      }
    }
    std::sort(side.begin(), side.end());
    consider(side, boundary[u]);
  }

  MostBalancedCut out;
  if (best) {
    out.side = std::move(best->side);
    out.sparsity = best->sparsity;
    out.demand = best->min_demand;
    out.provenance = CutProvenance::heuristic_base;
  }
  return out;
}

MostBalancedCut oracle_base_case(const WeightedGraph& g, const DemandVector& d,
                                 const BalCutParams& params, const Config& cfg) {
  if (g.n() > cfg.oracle_cap) return heuristic_most_balanced(g, d, params.psi);
  VertexSet s = brute_most_balanced(g, d, params.psi, cfg.oracle_cap);
  MostBalancedCut out;
  if (!s.empty()) {
    out.side = std::move(s);
    out.demand = d.of_set(out.side);
    Weight mn = std::min(out.demand, d.total() - out.demand);
    out.sparsity = cut_weight(g, out.side) / mn;
    out.demand = mn;
    out.provenance = CutProvenance::oracle_base;
  }
  return out;
}

}  // namespace

std::string to_string(CutProvenance p) {
  switch (p) {
    case CutProvenance::core_recursion: return "core_recursion";
    case CutProvenance::tree_cut: return "tree_cut";
    case CutProvenance::oracle_base: return "oracle_base";
    case CutProvenance::heuristic_base: return "heuristic_base";
    case CutProvenance::empty: return "empty";
  }
  return "?";
}

BalCutParams theorem_parameters(int m, const Weight& capacity_ratio, int r,
                                const Weight& psi_star, const Config& cfg) {
  if (r < 1) throw Error("theorem_parameters: r must be >= 1");
  BalCutParams p;
  p.r = r;
  p.r_total = r;
  p.m0 = m;
  p.psi_star = psi_star;
  p.beta_budget =
      weight_from_double(cfg.beta_budget_factor * std::log2(std::max(m, 2)));
  if (p.beta_budget < 1) p.beta_budget = 1;
  p.alpha_budget = weight_from_double(std::max(cfg.alpha_budget, 1.0));
  p.psi = 12 * p.beta_budget *
          weight_pow(3 * p.alpha_budget * p.alpha_budget * p.beta_budget, r) * psi_star;
  p.b = 6 * weight_pow(Weight(3), r);
  p.t = compute_tree_count(m, r, m, capacity_ratio, cfg);
  p.j_target = compute_core_target(m, p.t, cfg);
  return p;
}

MostBalancedCut weighted_bal_cut(const WeightedGraph& g, const DemandVector& d,
                                 const BalCutParams& params, const Config& cfg,
                                 BalCutTrace* trace) {
  if (d.all_zero()) throw AllZeroDemand("weighted_bal_cut: all demands zero");
  if (!g.is_connected()) throw Disconnected("weighted_bal_cut: input disconnected");

  const int level = params.r_total - params.r;
  BalCutTraceNode node;
  node.level = level;
  node.n = g.n();
  node.m = g.m();

  if (g.m() <= cfg.balcut_base_edges || params.r <= 0) {
    MostBalancedCut out = oracle_base_case(g, d, params, cfg);
    if (trace) {
      node.provenance = out.provenance;
      node.sparsity = out.sparsity;
      node.min_side_demand = out.demand;
      trace->push_back(node);
    }
    return out;
  }

  JTreeDistribution dist = decompose(g, d, params.t, params.j_target, cfg);
  node.t = params.t;
  node.j_target = params.j_target;
  node.beta_emp = dist.beta_emp;
  node.precondition_ok =
      params.psi >= 12 * dist.beta_emp * params.psi_star && params.b >= 6;

  std::optional<Candidate> best;
  auto offer = [&](std::optional<Candidate> c) {
    if (!c) return;
    if (!best || better(*c, *best)) best = std::move(c);
  };

  for (const JTreeItem& item : dist.items) {
    CoreAndTree split = split_core_and_tree(item.jtree, d);

    // Core route: sparsify, recurse, replace each core vertex by its tree.
    if (split.core_graph.n() >= 2 && !split.core_demands.all_zero()) {
      int child_t = compute_tree_count(params.m0, params.r_total, split.core_graph.m(),
                                       split.core_graph.capacity_ratio(), cfg);
      double logj = std::log2(std::max(split.core_graph.n(), 2));
      double logu =
          1.0 + std::log2(std::max(to_double(split.core_graph.capacity_ratio()), 1.0));
      int budget = static_cast<int>(split.core_graph.n() * logj * logu);
      SparsifyResult sp = sparsify(split.core_graph, params.alpha_budget, budget, cfg);
      node.alpha_max = std::max(node.alpha_max, sp.certificate.alpha_declared);
      if (sp.certificate.alpha_declared > params.alpha_budget)
        node.precondition_ok = false;
      node.size_bound_ok =
          node.size_bound_ok &&
          sp.graph.m() * 1.0 <=
              16.0 * g.m() /
                  std::pow(std::max(params.m0, 1), 1.0 / std::max(params.r_total, 1)) +
                  cfg.balcut_base_edges;

      BalCutParams child = params;
      child.psi = params.psi / sp.certificate.alpha_declared;
      child.psi_star =
          3 * sp.certificate.alpha_declared * dist.beta_emp * params.psi_star;
      child.b = params.b / 3;
      child.r = params.r - 1;
      child.t = child_t;
      child.j_target = compute_core_target(sp.graph.m(), child_t, cfg);

      MostBalancedCut inner = weighted_bal_cut(sp.graph, split.core_demands, child, cfg, trace);
      if (!inner.side.empty()) {
        std::vector<char> in_core_side(g.n(), 0);
        for (Vertex c : inner.side) in_core_side[split.core_orig_of[c]] = 1;
        VertexSet lifted;
        for (Vertex v = 0; v < g.n(); ++v)
          if (in_core_side[item.jtree.tree_of[v]]) lifted.push_back(v);
        offer(evaluate(g, d, lifted, params.psi, CutProvenance::core_recursion));
      }
    }

    // Tree route: contract the core, root at a demand centroid, greedy
    // subtree accumulation, then replace k by the whole core.
    if (split.tree.n() >= 2) {
      Vertex root = find_centroid_root(split.tree, split.tree_demands);
      RootedTree rt = RootedTree::root_at(split.tree, split.tree_demands, root);
      VertexSet tree_side = rooted_tree_bal_cut(rt, params.psi / 6);
      if (!tree_side.empty()) {
        VertexSet lifted;
        for (Vertex tv : tree_side) {
          if (tv == split.core_vertex) {
            lifted.insert(lifted.end(), item.jtree.core.begin(), item.jtree.core.end());
          } else {
            lifted.push_back(split.tree_orig_of[tv]);
          }
        }
        std::sort(lifted.begin(), lifted.end());
        offer(evaluate(g, d, lifted, params.psi, CutProvenance::tree_cut));
      }
    }
  }

  MostBalancedCut out;
  if (best) {
    out.side = std::move(best->side);
    out.sparsity = best->sparsity;
    out.demand = best->min_demand;
    out.provenance = best->provenance;
  }
  if (trace) {
    node.provenance = out.provenance;
    node.sparsity = out.sparsity;
    node.min_side_demand = out.demand;
    trace->push_back(node);
  }
  return out;
}

}  // namespace xdecomp
