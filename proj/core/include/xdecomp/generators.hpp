#pragma once

#include <cstdint>
#include <string>

#include "xdecomp/graph.hpp"

namespace xdecomp {

// Deterministic generators for the bench families and the test corpora.
// All weights are integers >= 1, so generated graphs are already normalized.

WeightedGraph gen_path(int n);
WeightedGraph gen_cycle(int n);
// Two cliques of k vertices with internal weight `clique_w`, joined by a
// unit bridge.
WeightedGraph gen_dumbbell(int k, const Weight& clique_w = Weight(10));

// Simple deterministic PRNG (xorshift based) so generated corpora do not
// depend on the standard library's distribution implementations.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  // Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// Connected random graph: a random spanning tree plus extra random edges up
// to ~target_m, integer weights in [1, max_w].
WeightedGraph gen_random_connected(int n, int target_m, int max_w, std::uint64_t seed);

// Random tree with integer weights in [1, max_w].
WeightedGraph gen_random_tree(int n, int max_w, std::uint64_t seed);

// Demands in {0} u [1, max_d] (integers); roughly zero_percent% zeros, but
// always at least two positive entries.
DemandVector gen_random_demands(int n, int max_d, int zero_percent, std::uint64_t seed);

WeightedGraph gen_family(const std::string& family, int size, std::uint64_t seed);

}  // namespace xdecomp
