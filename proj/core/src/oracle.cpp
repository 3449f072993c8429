#include "xdecomp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "xdecomp/errors.hpp"

namespace xdecomp {

namespace {

bool lex_less(const VertexSet& a, const VertexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_cap(const WeightedGraph& g, int cap) {
  if (g.n() > cap) {
    std::ostringstream os;
    os << "oracle instance with n=" << g.n() << " exceeds cap " << cap;
    throw TooLarge(os.str());
  }
  if (g.n() >= 63) throw TooLarge("oracle enumeration limited to n < 63");
}

// Gray-code walk over all 2^n subsets with O(deg) incremental updates of
// boundary weight and contained demand.
template <typename Fn>
void enumerate_subsets(const WeightedGraph& g, const DemandVector& d, Fn&& fn) {
  const int n = g.n();
  std::vector<char> in_side(n, 0);
  Weight boundary = 0;
  Weight demand_in = 0;
  const std::uint64_t count = std::uint64_t(1) << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    int v = std::countr_zero(k);
    if (in_side[v]) {
      in_side[v] = 0;
      demand_in -= d[v];
    } else {
      in_side[v] = 1;
      demand_in += d[v];
    }
    for (int id : g.incident(v)) {
      const Edge& e = g.edge(id);
      Vertex u = e.u == v ? e.v : e.u;
      if (in_side[u] == in_side[v])
        boundary -= e.w;
      else
        boundary += e.w;
    }
    fn(in_side, boundary, demand_in);
  }
}

}  // namespace

void for_each_subset(const WeightedGraph& g, const DemandVector& d,
                     const std::function<void(const std::vector<char>&, const Weight&,
                                              const Weight&)>& fn,
                     int cap) {
  check_cap(g, cap);
  enumerate_subsets(g, d, fn);
}

OracleResult brute_sparsest_cut(const WeightedGraph& g, const DemandVector& d, int cap) {
  check_cap(g, cap);
  if (d.all_zero()) throw AllZeroDemand("brute_sparsest_cut: no positive demand");
  OracleResult res;
  res.best_value = 0;
  bool found = false;
  const Weight total = d.total();
  enumerate_subsets(g, d, [&](const std::vector<char>& mask, const Weight& boundary,
                              const Weight& demand_in) {
    ++res.enumerated;
    if (demand_in == 0 || demand_in == total) return;
    Weight denom = std::min(demand_in, total - demand_in);
    Weight value = boundary / denom;
    if (!found || value < res.best_value) {
      found = true;
      res.best_value = value;
      res.best_set = mask_to_set(mask);
    } else if (value == res.best_value) {
      VertexSet cand = mask_to_set(mask);
      if (lex_less(cand, res.best_set)) res.best_set = std::move(cand);
    }
  });
  if (!found)
    throw DegenerateSide("brute_sparsest_cut: no proper demand-carrying cut exists");
  return res;
}

VertexSet brute_most_balanced(const WeightedGraph& g, const DemandVector& d,
                              const Weight& psi_star, int cap) {
  check_cap(g, cap);
  const Weight total = d.total();
  VertexSet best;
  Weight best_demand = 0;
  enumerate_subsets(g, d, [&](const std::vector<char>& mask, const Weight& boundary,
                              const Weight& demand_in) {
    if (demand_in == 0) return;
    if (2 * demand_in > total) return;
    // demand_in <= total/2, so it is the min side.
    if (boundary > psi_star * demand_in) return;
    if (demand_in > best_demand) {
      best_demand = demand_in;
      best = mask_to_set(mask);
    } else if (demand_in == best_demand && !best.empty()) {
      VertexSet cand = mask_to_set(mask);
      if (lex_less(cand, best)) best = std::move(cand);
    }
  });
  return best;
}

std::string DecompositionReport::summary() const {
  std::ostringstream os;
  os << (valid() ? "valid" : "INVALID") << " partition=" << (is_partition ? "ok" : "bad")
     << " budget=" << (budget_ok ? "ok" : "exceeded")
     << " inter_cluster_weight=" << weight_to_string(inter_cluster_weight) << " parts=";
  int verified = 0, unverified = 0, vacuous = 0, failed = 0;
  for (const PartReport& p : parts) {
    if (!p.ok) ++failed;
    switch (p.status) {
      case PartReport::Status::verified: ++verified; break;
      case PartReport::Status::unverified: ++unverified; break;
      case PartReport::Status::vacuous: ++vacuous; break;
    }
  }
  os << parts.size() << " (verified=" << verified << " vacuous=" << vacuous
     << " unverified=" << unverified << " failed=" << failed << ")";
  return os.str();
}

DecompositionReport brute_verify_decomposition(const WeightedGraph& g,
                                               const DemandVector& d,
                                               const std::vector<VertexSet>& parts,
                                               const Weight& eps, const Weight& psi,
                                               int cap) {
  DecompositionReport report;
  std::vector<int> owner(g.n(), -1);
  bool partition_ok = true;
  for (size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) {
      if (v < 0 || v >= g.n() || owner[v] != -1) partition_ok = false;
      if (v >= 0 && v < g.n()) owner[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (owner[v] == -1) partition_ok = false;
  report.is_partition = partition_ok;
  if (!partition_ok) return report;

  for (const Edge& e : g.edges())
    if (owner[e.u] != owner[e.v]) report.inter_cluster_weight += e.w;
  report.budget_ok = report.inter_cluster_weight <= eps * d.total();

  report.all_parts_ok = true;
  for (const VertexSet& part : parts) {
    PartReport pr;
    Subgraph sub = induced_subgraph(g, part);
    DemandVector dp = d.mapped(sub.orig_of);
    // A part whose demand cannot be split has no demand-carrying cut; the
    // sparsity condition is vacuous.
    int positive = 0;
    for (Vertex v = 0; v < dp.n(); ++v)
      if (dp[v] > 0) ++positive;
    if (positive <= 1) {
      pr.status = PartReport::Status::vacuous;
      pr.ok = true;
    } else if (sub.graph.n() > cap) {
      pr.status = PartReport::Status::unverified;
      pr.ok = true;
    } else {
      OracleResult r = brute_sparsest_cut(sub.graph, dp, cap);
      pr.status = PartReport::Status::verified;
      pr.sparsity = r.best_value;
      pr.ok = r.best_value >= psi;
    }
    if (!pr.ok) report.all_parts_ok = false;
    report.parts.push_back(std::move(pr));
  }
  return report;
}

}  // namespace xdecomp
