#include "xdecomp/jtree.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <random>

#include "xdecomp/errors.hpp"
#include "xdecomp/oracle.hpp"
#include "xdecomp/tree_cut.hpp"

namespace xdecomp {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Minimum spanning tree under the given lengths, ties by edge id.
std::vector<int> min_length_tree(const WeightedGraph& g, const std::vector<double>& len) {
  std::vector<int> ids(g.m());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    if (len[a] != len[b]) return len[a] < len[b];
    return a < b;
  });
  UnionFind uf(g.n());
  std::vector<int> tree;
  tree.reserve(g.n() - 1);
  for (int id : ids) {
    if (uf.unite(g.edge(id).u, g.edge(id).v)) tree.push_back(id);
  }
  return tree;
}

struct RootedView {
  std::vector<Vertex> parent;
  std::vector<int> parent_edge;
  std::vector<int> depth;
  std::vector<Vertex> order;  // parents before children
  std::vector<std::vector<Vertex>> up;  // binary lifting table

  void build(const WeightedGraph& g, const std::vector<int>& tree_edges, Vertex root) {
    const int n = g.n();
    std::vector<std::vector<std::pair<Vertex, int>>> adj(n);
    for (int id : tree_edges) {
      adj[g.edge(id).u].push_back({g.edge(id).v, id});
      adj[g.edge(id).v].push_back({g.edge(id).u, id});
    }
    parent.assign(n, -1);
    parent_edge.assign(n, -1);
    depth.assign(n, 0);
    order.clear();
    order.push_back(root);
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    for (size_t i = 0; i < order.size(); ++i) {
      Vertex v = order[i];
      for (auto [u, id] : adj[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          parent[u] = v;
          parent_edge[u] = id;
          depth[u] = depth[v] + 1;
          order.push_back(u);
        }
      }
    }
    int logn = 1;
    while ((1 << logn) < n) ++logn;
    up.assign(logn + 1, std::vector<Vertex>(n, -1));
    up[0] = parent;
    for (int k = 1; k <= logn; ++k)
      for (Vertex v = 0; v < n; ++v)
        up[k][v] = up[k - 1][v] == -1 ? -1 : up[k - 1][up[k - 1][v]];
  }

  Vertex lca(Vertex a, Vertex b) const {
    if (depth[a] < depth[b]) std::swap(a, b);
    int diff = depth[a] - depth[b];
    for (size_t k = 0; k < up.size(); ++k)
      if (diff & (1 << k)) a = up[k][a];
    if (a == b) return a;
    for (int k = static_cast<int>(up.size()) - 1; k >= 0; --k)
      if (up[k][a] != up[k][b]) {
        a = up[k][a];
        b = up[k][b];
      }
    return parent[a];
  }

  // Path a -> ancestor, inclusive on both ends.
  void walk_up(Vertex a, Vertex ancestor, std::vector<Vertex>& out) const {
    for (Vertex v = a;; v = parent[v]) {
      out.push_back(v);
      if (v == ancestor) break;
    }
  }
};

// Grows a connected core of the spanning tree around the highest-scoring
// vertices. Scores favour endpoints of heavy non-tree edges.
VertexSet grow_connected_core(const WeightedGraph& g, const std::vector<int>& tree_edges,
                              const std::vector<double>& score, int j_target) {
  const int n = g.n();
  std::vector<std::vector<Vertex>> adj(n);
  for (int id : tree_edges) {
    adj[g.edge(id).u].push_back(g.edge(id).v);
    adj[g.edge(id).v].push_back(g.edge(id).u);
  }
  Vertex seed = 0;
  for (Vertex v = 1; v < n; ++v)
    if (score[v] > score[seed]) seed = v;
  std::vector<char> in_core(n, 0), in_frontier(n, 0);
  using Item = std::pair<double, Vertex>;
  auto cmp = [](const Item& a, const Item& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;  // smaller id wins
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> frontier(cmp);
  VertexSet core;
  auto push = [&](Vertex v) {
    if (!in_core[v] && !in_frontier[v]) {
      in_frontier[v] = 1;
      frontier.push({score[v], v});
    }
  };
  in_core[seed] = 1;
  core.push_back(seed);
  for (Vertex u : adj[seed]) push(u);
  while (static_cast<int>(core.size()) < j_target && !frontier.empty()) {
    Vertex v = frontier.top().second;
    frontier.pop();
    if (in_core[v]) continue;
    in_core[v] = 1;
    core.push_back(v);
    for (Vertex u : adj[v]) push(u);
  }
  std::sort(core.begin(), core.end());
  return core;
}

struct BuiltJTree {
  JTree jt;
  std::vector<std::vector<Vertex>> paths;
  std::vector<Weight> tree_edge_load;  // by source edge id, for the MWU update
};

// Assembles the j-tree for one spanning tree and core: peripheral trees are
// the components of the spanning tree after removing core-core tree edges,
// every source edge is routed over forest paths plus one direct core edge,
// and host weights accumulate exactly the routed source weights.
BuiltJTree build_jtree(const WeightedGraph& g, const std::vector<int>& tree_edges,
                       const VertexSet& core, bool store_paths) {
  const int n = g.n();
  BuiltJTree out;
  JTree& jt = out.jt;
  jt.core = core;
  jt.is_core = set_to_mask(n, core);

  RootedView view;
  view.build(g, tree_edges, core[0]);

  jt.tree_of.assign(n, -1);
  for (Vertex v : view.order)
    jt.tree_of[v] = jt.is_core[v] ? v : jt.tree_of[view.parent[v]];

  // Load accumulation: difference trick along tree paths, plus a map for the
  // direct core edges.
  std::vector<Weight> diff(n, Weight(0));
  std::map<std::pair<Vertex, Vertex>, Weight> core_w;
  if (store_paths) out.paths.resize(g.m());
  std::vector<Vertex> scratch;
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edge(id);
    Vertex cu = jt.tree_of[e.u], cv = jt.tree_of[e.v];
    if (cu == cv) {
      Vertex l = view.lca(e.u, e.v);
      diff[e.u] += e.w;
      diff[e.v] += e.w;
      diff[l] -= 2 * e.w;
      if (store_paths) {
        auto& p = out.paths[id];
        view.walk_up(e.u, l, p);
        scratch.clear();
        view.walk_up(e.v, l, scratch);
        p.insert(p.end(), scratch.rbegin() + 1, scratch.rend());
      }
    } else {
      diff[e.u] += e.w;
      diff[cu] -= e.w;
      diff[e.v] += e.w;
      diff[cv] -= e.w;
      auto key = std::minmax(cu, cv);
      core_w[{key.first, key.second}] += e.w;
      if (store_paths) {
        auto& p = out.paths[id];
        view.walk_up(e.u, cu, p);
        scratch.clear();
        view.walk_up(e.v, cv, scratch);
        p.insert(p.end(), scratch.rbegin(), scratch.rend());
      }
    }
  }
  std::vector<Weight> subtree_sum = diff;
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it)
    if (view.parent[*it] != -1) subtree_sum[view.parent[*it]] += subtree_sum[*it];

  out.tree_edge_load.assign(g.m(), Weight(0));
  std::vector<Edge> host_edges;
  std::vector<std::pair<Vertex, Vertex>> forest_pairs;
  for (int id : tree_edges) {
    const Edge& e = g.edge(id);
    if (jt.is_core[e.u] && jt.is_core[e.v]) continue;  // lives in core_w
    Vertex child = view.parent[e.u] == e.v ? e.u : e.v;
    host_edges.push_back({e.u, e.v, subtree_sum[child]});
    forest_pairs.push_back(std::minmax(e.u, e.v));
    out.tree_edge_load[id] = subtree_sum[child];
  }
  for (auto& [key, w] : core_w) host_edges.push_back({key.first, key.second, w});
  for (int id : tree_edges) {
    const Edge& e = g.edge(id);
    if (jt.is_core[e.u] && jt.is_core[e.v]) {
      auto key = std::minmax(e.u, e.v);
      out.tree_edge_load[id] = core_w[{key.first, key.second}];
    }
  }

  jt.graph = WeightedGraph::from_edges(n, std::move(host_edges));
  // Recover forest edge ids in the assembled graph.
  std::map<std::pair<Vertex, Vertex>, int> edge_id;
  for (int id = 0; id < jt.graph.m(); ++id) {
    const Edge& e = jt.graph.edge(id);
    edge_id[std::minmax(e.u, e.v)] = id;
  }
  for (auto& pr : forest_pairs) jt.forest_edges.push_back(edge_id[pr]);
  std::sort(jt.forest_edges.begin(), jt.forest_edges.end());
  jt.core_edge_count = jt.graph.m() - static_cast<int>(jt.forest_edges.size());
  return out;
}

Weight average_cut_ratio_exact(const WeightedGraph& g,
                               const std::vector<const WeightedGraph*>& hosts,
                               const Weight& lambda) {
  const int n = g.n();
  std::vector<char> in_side(n, 0);
  Weight base = 0;
  std::vector<Weight> host_cut(hosts.size(), Weight(0));
  Weight best = 0;
  const std::uint64_t count = std::uint64_t(1) << n;
  auto flip = [&](const WeightedGraph& graph, Weight& acc, Vertex v) {
    for (int id : graph.incident(v)) {
      const Edge& e = graph.edge(id);
      Vertex u = e.u == v ? e.v : e.u;
      if (in_side[u] == in_side[v])
        acc -= e.w;
      else
        acc += e.w;
    }
  };
  for (std::uint64_t k = 1; k < count; ++k) {
    int v = std::countr_zero(k);
    in_side[v] ^= 1;
    // in_side already updated; recompute incident contributions for each graph
    for (size_t i = 0; i < hosts.size(); ++i) flip(*hosts[i], host_cut[i], v);
    flip(g, base, v);
    if (base == 0) continue;
    Weight avg = 0;
    for (const Weight& hc : host_cut) avg += hc;
    avg *= lambda;
    Weight ratio = avg / base;
    if (ratio > best) best = ratio;
  }
  return best;
}

Weight average_cut_ratio_sampled(const WeightedGraph& g,
                                 const std::vector<const WeightedGraph*>& hosts,
                                 const Weight& lambda) {
  const int n = g.n();
  std::vector<VertexSet> samples;
  for (Vertex v = 0; v < std::min(n, 64); ++v) samples.push_back({v});
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 32; ++trial) {
    VertexSet s;
    for (Vertex v = 0; v < n; ++v)
      if (rng() & 1) s.push_back(v);
    if (!s.empty() && static_cast<int>(s.size()) < n) samples.push_back(std::move(s));
  }
  Weight best = 0;
  for (const VertexSet& s : samples) {
    Weight base = cut_weight(g, s);
    if (base == 0) continue;
    Weight avg = 0;
    for (const WeightedGraph* h : hosts) avg += cut_weight(*h, s);
    avg *= lambda;
    Weight ratio = avg / base;
    if (ratio > best) best = ratio;
  }
  return best;
}

}  // namespace

JTreeDistribution decompose(const WeightedGraph& g, const DemandVector& d, int t,
                            int j_target, const Config& cfg) {
  if (!g.is_connected()) throw Disconnected("decompose: input graph is disconnected");
  if (t < 1) throw Error("decompose: t must be >= 1");
  if (j_target < 1) throw Error("decompose: j_target must be >= 1");
  const int n = g.n();

  JTreeDistribution dist;
  dist.paths_stored = n <= cfg.path_store_cap;
  const Weight lambda = Weight(1) / t;
  const Weight cap_bound = Weight(std::max(g.m(), 1)) * g.capacity_ratio();

  std::vector<int> all_tree(g.m());
  std::iota(all_tree.begin(), all_tree.end(), 0);

  std::vector<double> len(g.m());
  for (int id = 0; id < g.m(); ++id) len[id] = 1.0 / std::max(to_double(g.edge(id).w), 1e-300);

  const bool input_is_tree = g.is_tree();
  for (int round = 0; round < t; ++round) {
    std::vector<int> tree_edges;
    VertexSet core;
    if (input_is_tree) {
      tree_edges = all_tree;
      core = {d.all_zero() ? Vertex(0) : find_centroid_root(g, d)};
    } else if (j_target >= n) {
      tree_edges = min_length_tree(g, len);
      core.resize(n);
      std::iota(core.begin(), core.end(), 0);
    } else {
      tree_edges = min_length_tree(g, len);
      std::vector<char> in_tree(g.m(), 0);
      for (int id : tree_edges) in_tree[id] = 1;
      std::vector<double> score(n, 0.0);
      for (int id = 0; id < g.m(); ++id) {
        if (in_tree[id]) continue;
        double w = to_double(g.edge(id).w);
        score[g.edge(id).u] += w;
        score[g.edge(id).v] += w;
      }
      core = grow_connected_core(g, tree_edges, score, j_target);
    }

    BuiltJTree built = build_jtree(g, tree_edges, core, dist.paths_stored);

    if (built.jt.graph.capacity_ratio() > cap_bound)
      throw Error("decompose: j-tree capacity ratio exceeds m*U");

    // Multiplicative reweighting: inflate lengths of overloaded tree edges so
    // later rounds route around them.
    if (!input_is_tree && t > 1) {
      double max_infl = 1.0;
      std::vector<double> infl(g.m(), 0.0);
      for (int id : tree_edges) {
        infl[id] = to_double(built.tree_edge_load[id] / g.edge(id).w);
        max_infl = std::max(max_infl, infl[id]);
      }
      for (int id : tree_edges) len[id] *= 1.0 + infl[id] / max_infl;
    }

    JTreeItem item;
    item.lambda = lambda;
    item.jtree = std::move(built.jt);
    item.embed_paths = std::move(built.paths);
    dist.items.push_back(std::move(item));
  }

  std::vector<const WeightedGraph*> hosts;
  for (const JTreeItem& it : dist.items) hosts.push_back(&it.jtree.graph);
  if (n <= cfg.exact_cut_cap && n >= 2) {
    dist.beta_emp = average_cut_ratio_exact(g, hosts, lambda);
    dist.beta_sampled = false;
  } else if (n >= 2) {
    dist.beta_emp = average_cut_ratio_sampled(g, hosts, lambda);
    dist.beta_sampled = true;
  } else {
    dist.beta_emp = 1;
  }
  if (dist.beta_emp == 0) dist.beta_emp = 1;
  return dist;
}

JTreeReport verify_jtree(const JTree& jt) {
  JTreeReport report;
  auto fail = [&](const std::string& why) {
    report.ok = false;
    report.violations.push_back(why);
  };
  const int n = jt.graph.n();
  std::vector<char> is_forest_edge(jt.graph.m(), 0);
  for (int id : jt.forest_edges) {
    if (id < 0 || id >= jt.graph.m()) {
      fail("forest edge id out of range");
      return report;
    }
    is_forest_edge[id] = 1;
  }

  UnionFind uf(n);
  for (int id : jt.forest_edges) {
    const Edge& e = jt.graph.edge(id);
    if (!uf.unite(e.u, e.v)) fail("forest edges contain a cycle");
  }

  std::vector<int> core_in_component(n, 0);
  for (Vertex v : jt.core) {
    if (v < 0 || v >= n || !jt.is_core[v]) fail("core list and mask disagree");
  }
  for (Vertex v = 0; v < n; ++v)
    if (jt.is_core[v]) ++core_in_component[uf.find(v)];
  for (Vertex v = 0; v < n; ++v) {
    if (uf.find(v) == v && core_in_component[v] != 1)
      fail("forest component without exactly one core vertex");
  }

  for (int id = 0; id < jt.graph.m(); ++id) {
    if (is_forest_edge[id]) continue;
    const Edge& e = jt.graph.edge(id);
    if (!jt.is_core[e.u] || !jt.is_core[e.v])
      fail("non-forest edge with a non-core endpoint");
  }

  for (Vertex v = 0; v < n; ++v) {
    Vertex c = jt.tree_of[v];
    if (c < 0 || c >= n || !jt.is_core[c]) {
      fail("tree_of points to a non-core vertex");
      continue;
    }
    if (jt.is_core[v] && c != v) fail("tree_of of a core vertex is not itself");
    if (uf.find(v) != uf.find(c)) fail("tree_of disagrees with forest components");
  }

  if (jt.core_edge_count != jt.graph.m() - static_cast<int>(jt.forest_edges.size()))
    fail("core_edge_count inconsistent");
  return report;
}

Weight verify_embedding_congestion(const WeightedGraph& g,
                                   const std::vector<std::vector<Vertex>>& paths,
                                   const WeightedGraph& host) {
  if (static_cast<int>(paths.size()) != g.m())
    throw Error("verify_embedding_congestion: one path per source edge required");
  std::map<std::pair<Vertex, Vertex>, int> host_edge;
  for (int id = 0; id < host.m(); ++id)
    host_edge[std::minmax(host.edge(id).u, host.edge(id).v)] = id;
  std::vector<Weight> load(host.m(), Weight(0));
  for (int id = 0; id < g.m(); ++id) {
    const auto& p = paths[id];
    if (p.size() < 2) throw Error("verify_embedding_congestion: path too short");
    if (p.front() != g.edge(id).u || p.back() != g.edge(id).v) {
      if (p.front() != g.edge(id).v || p.back() != g.edge(id).u)
        throw Error("verify_embedding_congestion: path endpoints mismatch");
    }
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      auto it = host_edge.find(std::minmax(p[i], p[i + 1]));
      if (it == host_edge.end())
        throw Error("verify_embedding_congestion: path uses a non-host edge");
      load[it->second] += g.edge(id).w;
    }
  }
  Weight congestion = 0;
  for (int id = 0; id < host.m(); ++id)
    congestion = std::max(congestion, load[id] / host.edge(id).w);
  return congestion;
}

CoreAndTree split_core_and_tree(const JTree& jt, const DemandVector& d) {
  CoreAndTree out;
  const int n = jt.graph.n();

  Subgraph core_sub = induced_subgraph(jt.graph, jt.core);
  out.core_graph = std::move(core_sub.graph);
  out.core_orig_of = std::move(core_sub.orig_of);
  out.core_new_of = std::move(core_sub.new_of);
  std::vector<Weight> dh(jt.core.size(), Weight(0));
  for (Vertex v = 0; v < n; ++v) dh[out.core_new_of[jt.tree_of[v]]] += d[v];
  out.core_demands = DemandVector(std::move(dh));

  Contraction c = contract(jt.graph, {jt.core});
  out.tree = std::move(c.graph);
  out.core_vertex = c.new_of[jt.core[0]];
  out.tree_new_of = std::move(c.new_of);
  out.tree_orig_of.assign(out.tree.n(), -1);
  std::vector<Weight> dt(out.tree.n(), Weight(0));
  for (Vertex v = 0; v < n; ++v) {
    dt[out.tree_new_of[v]] += d[v];
    if (!jt.is_core[v]) out.tree_orig_of[out.tree_new_of[v]] = v;
  }
  out.tree_demands = DemandVector(std::move(dt));
  return out;
}

}  // namespace xdecomp
