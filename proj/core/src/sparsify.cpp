#include "xdecomp/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <random>

#include "xdecomp/errors.hpp"

namespace xdecomp {

namespace {

// Greedy spanner over one weight bucket: edges ascending by weight are kept
// when the current spanner distance between their endpoints exceeds
// stretch * w(e). Keeps a spanning structure of every bucket component.
std::vector<int> greedy_spanner(const WeightedGraph& g, const std::vector<int>& bucket,
                                int stretch) {
  const int n = g.n();
  std::vector<int> order = bucket;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.edge(a).w != g.edge(b).w) return g.edge(a).w < g.edge(b).w;
    return a < b;
  });
  std::vector<std::vector<std::pair<Vertex, Weight>>> adj(n);
  std::vector<int> kept;
  // Bounded Dijkstra on the partial spanner.
  std::vector<Weight> dist(n);
  std::vector<int> stamp(n, -1);
  int query = 0;
  auto distance_exceeds = [&](Vertex s, Vertex t, const Weight& bound) {
    ++query;
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    stamp[s] = query;
    dist[s] = 0;
    pq.push({Weight(0), s});
    while (!pq.empty()) {
      auto [dv, v] = pq.top();
      pq.pop();
      if (stamp[v] == query && dv > dist[v]) continue;
      if (v == t) return false;
      for (auto& [u, w] : adj[v]) {
        Weight nd = dv + w;
        if (nd > bound) continue;
        if (stamp[u] != query || nd < dist[u]) {
          stamp[u] = query;
          dist[u] = nd;
          pq.push({nd, u});
        }
      }
    }
    return true;
  };
  for (int id : order) {
    const Edge& e = g.edge(id);
    if (distance_exceeds(e.u, e.v, Weight(stretch) * e.w)) {
      kept.push_back(id);
      adj[e.u].push_back({e.v, e.w});
      adj[e.v].push_back({e.u, e.w});
    }
  }
  return kept;
}

Weight measure_alpha_exact(const WeightedGraph& g, const WeightedGraph& h) {
  const int n = g.n();
  std::vector<char> in_side(n, 0);
  Weight cut_g = 0, cut_h = 0;
  Weight alpha = 1;
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
  const std::uint64_t count = std::uint64_t(1) << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    int v = std::countr_zero(k);
    in_side[v] ^= 1;
    flip(g, cut_g, v);
    flip(h, cut_h, v);
    if (cut_g == 0 && cut_h == 0) continue;
    if (cut_g == 0 || cut_h == 0)
      throw Error("sparsify: output disconnects a cut of the input");
    alpha = std::max(alpha, cut_g / cut_h);
    alpha = std::max(alpha, cut_h / cut_g);
  }
  return alpha;
}

Weight measure_alpha_sampled(const WeightedGraph& g, const WeightedGraph& h) {
  const int n = g.n();
  std::vector<VertexSet> samples;
  for (Vertex v = 0; v < std::min(n, 64); ++v) samples.push_back({v});
  std::mt19937 rng(98765);
  for (int trial = 0; trial < 32; ++trial) {
    VertexSet s;
    for (Vertex v = 0; v < n; ++v)
      if (rng() & 1) s.push_back(v);
    if (!s.empty() && static_cast<int>(s.size()) < n) samples.push_back(std::move(s));
  }
  Weight alpha = 1;
  for (const VertexSet& s : samples) {
    Weight a = cut_weight(g, s), b = cut_weight(h, s);
    if (a == 0 && b == 0) continue;
    if (a == 0 || b == 0) throw Error("sparsify: output disconnects a cut of the input");
    alpha = std::max(alpha, a / b);
    alpha = std::max(alpha, b / a);
  }
  return alpha;
}

}  // namespace

SparsifyResult sparsify(const WeightedGraph& g, const Weight& alpha_target,
                        int size_budget, const Config& cfg) {
  if (alpha_target < 1) throw Error("sparsify: alpha_target must be >= 1");
  SparsifyResult out;
  const int n = g.n();
  const int m = g.m();
  double logn = std::log2(std::max(n, 2));
  double logu = 1.0 + std::log2(std::max(to_double(g.capacity_ratio()), 1.0));
  int allowed = std::max(size_budget,
                         static_cast<int>(cfg.sparsify_size_const * n * logn * logu));
  out.certificate.edges_before = m;
  if (m <= allowed || n - 1 >= m) {  // small enough, or already a forest
    out.graph = g;
    out.certificate.method = SparsifierCertificate::Method::passthrough;
    out.certificate.alpha_declared = 1;
    out.certificate.edges_after = m;
    return out;
  }

  // Bucket edges by power-of-two weight class and span each bucket.
  const Weight base = g.min_weight();
  std::map<int, std::vector<int>> buckets;
  for (int id = 0; id < m; ++id) {
    double rel = to_double(g.edge(id).w / base);
    int cls = rel <= 1.0 ? 0 : static_cast<int>(std::floor(std::log2(rel)));
    buckets[cls].push_back(id);
  }
  int stretch = 2 * static_cast<int>(std::ceil(std::log2(std::max(n, 2)))) - 1;
  std::vector<char> keep(m, 0);
  for (auto& [cls, ids] : buckets) {
    for (int id : greedy_spanner(g, ids, stretch)) keep[id] = 1;
  }

  // Rescale kept edges so each vertex keeps its per-bucket incident weight;
  // the factor is the mean of the two endpoint ratios, which keeps weights
  // rational and singleton cuts close.
  std::vector<Edge> edges;
  for (auto& [cls, ids] : buckets) {
    std::vector<Weight> full(n, Weight(0)), kept_deg(n, Weight(0));
    for (int id : ids) {
      const Edge& e = g.edge(id);
      full[e.u] += e.w;
      full[e.v] += e.w;
      if (keep[id]) {
        kept_deg[e.u] += e.w;
        kept_deg[e.v] += e.w;
      }
    }
    for (int id : ids) {
      if (!keep[id]) continue;
      const Edge& e = g.edge(id);
      Weight gu = kept_deg[e.u] > 0 ? full[e.u] / kept_deg[e.u] : Weight(1);
      Weight gv = kept_deg[e.v] > 0 ? full[e.v] / kept_deg[e.v] : Weight(1);
      edges.push_back({e.u, e.v, e.w * (gu + gv) / 2});
    }
  }
  out.graph = WeightedGraph::from_edges(n, std::move(edges));
  out.certificate.method = SparsifierCertificate::Method::spanner_union;
  out.certificate.edges_after = out.graph.m();
  if (n <= cfg.exact_cut_cap) {
    out.certificate.alpha_declared = measure_alpha_exact(g, out.graph);
  } else {
    // Sampled measurement with headroom; flagged so consumers can tell.
    out.certificate.alpha_declared = measure_alpha_sampled(g, out.graph) * 2;
    out.certificate.alpha_sampled = true;
  }
  if (out.certificate.alpha_declared < 1) out.certificate.alpha_declared = 1;
  return out;
}

Laplacian Laplacian::of(const WeightedGraph& g) {
  Laplacian l;
  l.matrix.assign(g.n(), std::vector<Weight>(g.n(), Weight(0)));
  for (const Edge& e : g.edges()) {
    l.matrix[e.u][e.v] -= e.w;
    l.matrix[e.v][e.u] -= e.w;
    l.matrix[e.u][e.u] += e.w;
    l.matrix[e.v][e.v] += e.w;
  }
  return l;
}

Weight quadratic_form(const Laplacian& l, const std::vector<Weight>& x) {
  if (static_cast<int>(x.size()) != l.n())
    throw Error("quadratic_form: dimension mismatch");
  Weight total = 0;
  for (int i = 0; i < l.n(); ++i) {
    Weight row = 0;
    for (int j = 0; j < l.n(); ++j) row += l.matrix[i][j] * x[j];
    total += x[i] * row;
  }
  return total;
}

}  // namespace xdecomp
