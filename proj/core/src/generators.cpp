#include "xdecomp/generators.hpp"

#include <algorithm>
#include <set>

#include "xdecomp/errors.hpp"

namespace xdecomp {

WeightedGraph gen_path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Weight(1)});
  return WeightedGraph::from_edges(n, std::move(edges));
}

WeightedGraph gen_cycle(int n) {
  if (n < 3) return gen_path(n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, Weight(1)});
  return WeightedGraph::from_edges(n, std::move(edges));
}

WeightedGraph gen_dumbbell(int k, const Weight& clique_w) {
  std::vector<Edge> edges;
  for (int side = 0; side < 2; ++side) {
    int base = side * k;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        edges.push_back({base + i, base + j, clique_w});
  }
  edges.push_back({0, k, Weight(1)});
  return WeightedGraph::from_edges(2 * k, std::move(edges));
}

WeightedGraph gen_random_tree(int n, int max_w, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int parent = rng.uniform(0, v - 1);
    edges.push_back({parent, v, Weight(rng.uniform(1, max_w))});
  }
  if (!edges.empty()) edges[0].w = 1;  // keep generated graphs normalized
  return WeightedGraph::from_edges(n, std::move(edges));
}

WeightedGraph gen_random_connected(int n, int target_m, int max_w, std::uint64_t seed) {
  if (n < 1) throw Error("gen_random_connected: n >= 1 required");
  Rng rng(seed);
  std::set<std::pair<int, int>> used;
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int parent = rng.uniform(0, v - 1);
    edges.push_back({parent, v, Weight(rng.uniform(1, max_w))});
    used.insert({std::min(parent, v), std::max(parent, v)});
  }
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  int attempts = 0;
  while (static_cast<long long>(edges.size()) < std::min<long long>(target_m, max_edges) &&
         attempts < 20 * target_m + 100) {
    ++attempts;
    int u = rng.uniform(0, n - 1);
    int v = rng.uniform(0, n - 1);
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (used.count({key.first, key.second})) continue;
    used.insert({key.first, key.second});
    edges.push_back({u, v, Weight(rng.uniform(1, max_w))});
  }
  if (!edges.empty()) edges[0].w = 1;  // keep generated graphs normalized
  return WeightedGraph::from_edges(n, std::move(edges));
}

DemandVector gen_random_demands(int n, int max_d, int zero_percent, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Weight> d(n);
  int positive = 0;
  for (int v = 0; v < n; ++v) {
    if (rng.uniform(0, 99) < zero_percent) {
      d[v] = 0;
    } else {
      d[v] = Weight(rng.uniform(1, max_d));
      ++positive;
    }
  }
  for (int v = 0; positive < 2 && v < n; ++v) {
    if (d[v] == 0) {
      d[v] = Weight(rng.uniform(1, max_d));
      ++positive;
    }
  }
  return DemandVector(std::move(d));
}

WeightedGraph gen_family(const std::string& family, int size, std::uint64_t seed) {
  if (family == "path") return gen_path(size);
  if (family == "cycle") return gen_cycle(size);
  if (family == "dumbbell") return gen_dumbbell(std::max(size / 2, 2));
  if (family == "random") {
    int n = std::max(size / 4, 4);
    return gen_random_connected(n, size, 16, seed);
  }
  throw Error("unknown bench family: " + family);
}

}  // namespace xdecomp
