#include "xdecomp/decomp.hpp"

#include <algorithm>
#include <cmath>

#include "xdecomp/errors.hpp"

namespace xdecomp {

namespace {

struct Cluster {
  VertexSet vertices;  // sorted g ids
  bool active = true;
  PartCertificate certificate;
};

Decomposition run_once(const WeightedGraph& g, const DemandVector& d, const Weight& eps,
                       int r, double c, const Config& cfg, BalCutTrace* trace) {
  Decomposition dec;
  dec.c_used = c;

  Weight mu = Weight(std::max(g.m(), 1)) * g.capacity_ratio();
  double logmu = std::max(std::log2(to_double(mu)), 1.0);
  Weight alpha_sched = prune_alpha_schedule(g.m(), g.capacity_ratio(), r, cfg);
  dec.psi_achieved = eps / (weight_from_double(c * logmu) * alpha_sched);
  if (dec.psi_achieved > 1) dec.psi_achieved = 1;
  const Weight psi = dec.psi_achieved;

  std::vector<Cluster> clusters;
  for (const VertexSet& comp : connected_components(g)) {
    Cluster cl;
    cl.vertices = comp;
    clusters.push_back(std::move(cl));
  }

  auto deactivate = [&](Cluster& cl) {
    // Clusters whose demand cannot be split have no demand-carrying cut.
    Weight total = 0;
    int positive = 0;
    for (Vertex v : cl.vertices) {
      total += d[v];
      if (d[v] > 0) ++positive;
    }
    if (total == 0) {
      cl.active = false;
      cl.certificate.kind = PartCertificate::Kind::zero_demand;
      cl.certificate.strong = true;
      return true;
    }
    if (cl.vertices.size() == 1 || positive <= 1) {
      cl.active = false;
      cl.certificate.kind = PartCertificate::Kind::singleton;
      cl.certificate.strong = true;
      return true;
    }
    return false;
  };
  for (Cluster& cl : clusters) deactivate(cl);

  auto max_active_demand = [&]() {
    Weight mx = 0;
    for (const Cluster& cl : clusters)
      if (cl.active) mx = std::max(mx, d.of_set(cl.vertices));
    return mx;
  };

  while (true) {
    bool any_active = false;
    for (const Cluster& cl : clusters)
      if (cl.active) any_active = true;
    if (!any_active) break;
    ++dec.iterations;
    if (dec.iterations > 64 * (1 + static_cast<int>(logmu)))
      throw Error("expander_decomposition: iteration bound exceeded");

    // Deterministic order: by smallest contained vertex id.
    std::vector<size_t> order;
    for (size_t i = 0; i < clusters.size(); ++i)
      if (clusters[i].active) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return clusters[a].vertices[0] < clusters[b].vertices[0];
    });

    std::vector<Cluster> fresh;
    for (size_t idx : order) {
      Cluster& cl = clusters[idx];
      Subgraph sub = induced_subgraph(g, cl.vertices);
      DemandVector dsub = d.mapped(sub.orig_of);
      PruneResult pr = bal_cut_prune(sub.graph, dsub, psi, r, cfg, trace);
      dec.alpha_emp_max = std::max(dec.alpha_emp_max, pr.alpha_emp);
      dec.deleted_edge_weight += pr.boundary_weight;

      auto lift = [&](const VertexSet& s) {
        VertexSet out;
        out.reserve(s.size());
        for (Vertex v : s) out.push_back(sub.orig_of[v]);
        std::sort(out.begin(), out.end());
        return out;
      };
      VertexSet a = lift(pr.a);
      VertexSet b = lift(pr.b);
      if (pr.kase == PruneResult::Case::cut) {
        Cluster ca;
        ca.vertices = std::move(a);
        if (!deactivate(ca)) ca.active = true;
        Cluster cb;
        cb.vertices = std::move(b);
        if (!deactivate(cb)) cb.active = true;
        cl.active = false;
        cl.vertices.clear();
        fresh.push_back(std::move(ca));
        fresh.push_back(std::move(cb));
      } else {
        cl.vertices = std::move(a);
        cl.active = false;
        cl.certificate.kind = pr.strong_certified
                                  ? PartCertificate::Kind::oracle_verified
                                  : PartCertificate::Kind::prune_certified;
        cl.certificate.strong = pr.strong_certified;
        cl.certificate.weak_threshold = pr.certified_threshold;
        if (!b.empty()) {
          Cluster cb;
          cb.vertices = std::move(b);
          if (!deactivate(cb)) cb.active = true;
          fresh.push_back(std::move(cb));
        }
      }
    }
    for (Cluster& cl : fresh) clusters.push_back(std::move(cl));
    dec.active_demand_history.push_back(max_active_demand());
  }

  for (Cluster& cl : clusters) {
    if (cl.vertices.empty()) continue;
    dec.parts.push_back(cl.vertices);
    dec.per_part_certificates.push_back(cl.certificate);
  }
  // Canonical part order: by smallest contained vertex.
  std::vector<size_t> order(dec.parts.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return dec.parts[a][0] < dec.parts[b][0]; });
  std::vector<VertexSet> parts;
  std::vector<PartCertificate> certs;
  for (size_t i : order) {
    parts.push_back(std::move(dec.parts[i]));
    certs.push_back(dec.per_part_certificates[i]);
  }
  dec.parts = std::move(parts);
  dec.per_part_certificates = std::move(certs);

  // Exact recomputation of the deleted weight from the final parts.
  std::vector<int> owner(g.n(), -1);
  for (size_t i = 0; i < dec.parts.size(); ++i)
    for (Vertex v : dec.parts[i]) owner[v] = static_cast<int>(i);
  Weight recomputed = 0;
  for (const Edge& e : g.edges())
    if (owner[e.u] != owner[e.v]) recomputed += e.w;
  dec.deleted_edge_weight = recomputed;
  return dec;
}

}  // namespace

Decomposition expander_decomposition(const WeightedGraph& g, const DemandVector& d,
                                     const Weight& eps, int r, const Config& cfg,
                                     BalCutTrace* trace) {
  if (d.all_zero()) throw AllZeroDemand("expander_decomposition: all demands zero");
  if (!(eps > 0 && eps <= 1)) throw Error("expander_decomposition: need eps in (0,1]");
  if (r < 1) throw Error("expander_decomposition: need r >= 1");

  double c = cfg.c_budget;
  Decomposition dec;
  for (int attempt = 0;; ++attempt) {
    dec = run_once(g, d, eps, r, c, cfg, trace);
    dec.restarts = attempt;
    if (dec.deleted_edge_weight <= eps * d.total()) return dec;
    if (attempt >= cfg.max_restarts)
      throw Error("expander_decomposition: budget violated after restarts");
    c *= 2;
  }
}

DecompositionReport verify_decomposition(const WeightedGraph& g, const DemandVector& d,
                                         const Decomposition& dec, const Weight& eps,
                                         const Weight& psi, int cap) {
  return brute_verify_decomposition(g, d, dec.parts, eps, psi, cap);
}

}  // namespace xdecomp
