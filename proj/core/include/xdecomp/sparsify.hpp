#pragma once

#include <vector>

#include "xdecomp/config.hpp"
#include "xdecomp/graph.hpp"

namespace xdecomp {

struct SparsifierCertificate {
  enum class Method { passthrough, spanner_union };
  Method method = Method::passthrough;
  Weight alpha_declared = 1;  // all cuts of the output are within this factor
  int edges_before = 0;
  int edges_after = 0;
  bool alpha_sampled = false;  // alpha measured on sampled cuts only (large n)
};

struct SparsifyResult {
  WeightedGraph graph;
  SparsifierCertificate certificate;
};

// Shrinks the edge count while keeping every cut within the certificate's
// declared factor of the original. Identity below the size budget; greedy
// spanner layers per power-of-two weight class above it. The certificate's
// alpha is measured on the output (exactly at small n), not assumed.
SparsifyResult sparsify(const WeightedGraph& g, const Weight& alpha_target,
                        int size_budget, const Config& cfg = {});

// Dense Laplacian, for verification only.
struct Laplacian {
  std::vector<std::vector<Weight>> matrix;
  static Laplacian of(const WeightedGraph& g);
  int n() const { return static_cast<int>(matrix.size()); }
};

// x^T L x. Equals cut_weight(g, S) for indicator vectors of S.
Weight quadratic_form(const Laplacian& l, const std::vector<Weight>& x);

}  // namespace xdecomp
