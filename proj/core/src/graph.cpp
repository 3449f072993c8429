#include "xdecomp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace xdecomp {

namespace {

#ifndef XDECOMP_DOUBLE_WEIGHTS
// Writes a rational canonically: integers as digits, denominators of the
// form 2^a 5^b as exact terminating decimals, anything else as "p/q".
std::string rational_to_string(const Weight& w) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(w);
  cpp_int den = denominator(w);
  if (den == 1) return num.str();
  cpp_int d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return num.str() + "/" + den.str();
  int digits = std::max(twos, fives);
  cpp_int scaled = num;
  for (int i = 0; i < digits; ++i) scaled *= 10;
  scaled /= den;
  bool neg = scaled < 0;
  std::string s = (neg ? cpp_int(-scaled) : scaled).str();
  while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
  s.insert(s.end() - digits, '.');
  return (neg ? "-" : "") + s;
}
#endif

}  // namespace

std::string weight_to_string(const Weight& w) {
#ifdef XDECOMP_DOUBLE_WEIGHTS
  std::ostringstream os;
  os.precision(17);
  os << w;
  return os.str();
#else
  return rational_to_string(w);
#endif
}

Weight weight_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty weight literal");
#ifdef XDECOMP_DOUBLE_WEIGHTS
  size_t pos = 0;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    double num = std::stod(s.substr(0, slash));
    double den = std::stod(s.substr(slash + 1));
    return num / den;
  }
  double val = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad weight literal: " + s);
  return val;
#else
  using boost::multiprecision::cpp_int;
  auto parse_int = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("bad weight literal");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bad weight literal");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("bad weight literal: " + t);
    return cpp_int(t);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    cpp_int num = parse_int(s.substr(0, slash));
    cpp_int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Weight(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.empty()) throw std::invalid_argument("bad weight literal: " + s);
    bool neg = !head.empty() && head[0] == '-';
    cpp_int ip = head.empty() || head == "-" || head == "+" ? cpp_int(0)
                                                            : parse_int(head);
    if (neg && ip < 0) ip = -ip;
    cpp_int fp = parse_int(frac);
    if (fp < 0) throw std::invalid_argument("bad weight literal: " + s);
    cpp_int den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    cpp_int num = ip * den + fp;
    if (neg) num = -num;
    return Weight(num, den);
  }
  return Weight(parse_int(s));
#endif
}

WeightedGraph WeightedGraph::from_edges(int n, std::vector<Edge> edges) {
  WeightedGraph g;
  g.n_ = n;
  std::map<std::pair<Vertex, Vertex>, Weight> merged;
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error("self-loop rejected");
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw Error("edge endpoint out of range");
    if (!(e.w > 0)) throw Error("non-positive edge weight");
    auto key = std::minmax(e.u, e.v);
    merged[{key.first, key.second}] += e.w;
  }
  g.edges_.reserve(merged.size());
  g.adjacency_.assign(n, {});
  for (auto& [key, w] : merged) {
    int id = static_cast<int>(g.edges_.size());
    g.edges_.push_back({key.first, key.second, w});
    g.adjacency_[key.first].push_back(id);
    g.adjacency_[key.second].push_back(id);
  }
  return g;
}

Weight WeightedGraph::total_weight() const {
  Weight t = 0;
  for (const Edge& e : edges_) t += e.w;
  return t;
}

Weight WeightedGraph::min_weight() const {
  if (edges_.empty()) return Weight(1);
  Weight mn = edges_[0].w;
  for (const Edge& e : edges_) mn = std::min(mn, e.w);
  return mn;
}

Weight WeightedGraph::max_weight() const {
  if (edges_.empty()) return Weight(1);
  Weight mx = edges_[0].w;
  for (const Edge& e : edges_) mx = std::max(mx, e.w);
  return mx;
}

Weight WeightedGraph::capacity_ratio() const {
  if (edges_.empty()) return Weight(1);
  return max_weight() / min_weight();
}

Weight WeightedGraph::weighted_degree(Vertex v) const {
  Weight d = 0;
  for (int id : adjacency_[v]) d += edges_[id].w;
  return d;
}

bool WeightedGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (int id : adjacency_[v]) {
      Vertex u = edges_[id].u == v ? edges_[id].v : edges_[id].u;
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
    }
  }
  return visited == n_;
}

DemandVector::DemandVector(std::vector<Weight> d) : d_(std::move(d)) {
  for (const Weight& x : d_) {
    if (x < 0) throw Error("negative demand");
    total_ += x;
  }
}

DemandVector DemandVector::uniform(int n, const Weight& value) {
  return DemandVector(std::vector<Weight>(n, value));
}

DemandVector DemandVector::degrees(const WeightedGraph& g) {
  std::vector<Weight> d(g.n());
  for (Vertex v = 0; v < g.n(); ++v) d[v] = g.weighted_degree(v);
  return DemandVector(std::move(d));
}

Weight DemandVector::of_set(const VertexSet& s) const {
  Weight t = 0;
  for (Vertex v : s) t += d_[v];
  return t;
}

DemandVector DemandVector::mapped(const std::vector<Vertex>& orig_of) const {
  std::vector<Weight> d(orig_of.size());
  for (size_t i = 0; i < orig_of.size(); ++i) d[i] = d_[orig_of[i]];
  return DemandVector(std::move(d));
}

std::vector<char> set_to_mask(int n, const VertexSet& s) {
  std::vector<char> mask(n, 0);
  for (Vertex v : s) mask[v] = 1;
  return mask;
}

VertexSet mask_to_set(const std::vector<char>& mask) {
  VertexSet s;
  for (size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) s.push_back(static_cast<Vertex>(v));
  return s;
}

VertexSet complement_set(int n, const VertexSet& s) {
  std::vector<char> mask = set_to_mask(n, s);
  VertexSet c;
  c.reserve(n - s.size());
  for (Vertex v = 0; v < n; ++v)
    if (!mask[v]) c.push_back(v);
  return c;
}

Weight cut_weight_mask(const WeightedGraph& g, const std::vector<char>& in_side) {
  Weight total = 0;
  for (const Edge& e : g.edges())
    if (in_side[e.u] != in_side[e.v]) total += e.w;
  return total;
}

Weight cut_weight(const WeightedGraph& g, const VertexSet& s) {
  return cut_weight_mask(g, set_to_mask(g.n(), s));
}

Weight d_sparsity(const WeightedGraph& g, const DemandVector& d, const VertexSet& s) {
  Weight in = d.of_set(s);
  Weight out = d.total() - in;
  if (in == 0 || out == 0)
    throw DegenerateSide("cut side carries no demand information");
  return cut_weight(g, s) / std::min(in, out);
}

Cut Cut::of(const WeightedGraph& g, const DemandVector& d, const VertexSet& side) {
  Cut c;
  c.side = side;
  c.boundary_weight = cut_weight(g, side);
  c.demand_in = d.of_set(side);
  c.demand_out = d.total() - c.demand_in;
  if (c.demand_in > 0 && c.demand_out > 0)
    c.sparsity = c.boundary_weight / std::min(c.demand_in, c.demand_out);
  return c;
}

Subgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s) {
  if (s.empty()) throw Error("induced_subgraph: empty vertex set");
  Subgraph sub;
  sub.orig_of = s;
  sub.new_of.assign(g.n(), -1);
  for (size_t i = 0; i < s.size(); ++i) sub.new_of[s[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex u = sub.new_of[e.u], v = sub.new_of[e.v];
    if (u >= 0 && v >= 0) edges.push_back({u, v, e.w});
  }
  sub.graph = WeightedGraph::from_edges(static_cast<int>(s.size()), std::move(edges));
  return sub;
}

Contraction contract(const WeightedGraph& g, const std::vector<VertexSet>& groups) {
  Contraction c;
  c.new_of.assign(g.n(), -1);
  int next = 0;
  for (const VertexSet& grp : groups) {
    if (grp.empty()) throw Error("contract: empty group");
    for (Vertex v : grp) {
      if (c.new_of[v] != -1) throw Error("contract: overlapping groups");
      c.new_of[v] = next;
    }
    ++next;
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (c.new_of[v] == -1) c.new_of[v] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex u = c.new_of[e.u], v = c.new_of[e.v];
    if (u != v) edges.push_back({u, v, e.w});
  }
  c.graph = WeightedGraph::from_edges(next, std::move(edges));
  return c;
}

std::vector<VertexSet> connected_components(const WeightedGraph& g) {
  std::vector<int> comp(g.n(), -1);
  int k = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = k;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (int id : g.incident(v)) {
        Vertex u = g.edge(id).u == v ? g.edge(id).v : g.edge(id).u;
        if (comp[u] == -1) {
          comp[u] = k;
          stack.push_back(u);
        }
      }
    }
    ++k;
  }
  std::vector<VertexSet> out(k);
  for (Vertex v = 0; v < g.n(); ++v) out[comp[v]].push_back(v);
  return out;
}

NormalizedGraph normalize_graph(const WeightedGraph& g) {
  NormalizedGraph out;
  out.scale = g.min_weight();
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.w /= out.scale;
  out.graph = WeightedGraph::from_edges(g.n(), std::move(edges));
  return out;
}

NormalizedDemands normalize_demands(const DemandVector& d) {
  NormalizedDemands out;
  Weight mn = 0;
  for (Vertex v = 0; v < d.n(); ++v)
    if (d[v] > 0 && (mn == 0 || d[v] < mn)) mn = d[v];
  out.scale = mn == 0 ? Weight(1) : mn;
  std::vector<Weight> scaled(d.n());
  for (Vertex v = 0; v < d.n(); ++v) scaled[v] = d[v] / out.scale;
  out.demands = DemandVector(std::move(scaled));
  return out;
}

}  // namespace xdecomp
