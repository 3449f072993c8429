#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "xdecomp/decomp.hpp"
#include "xdecomp/graph.hpp"

namespace xdecomp {

struct ParsedGraph {
  WeightedGraph graph;   // normalized: min weight 1
  Weight weight_scale;   // original = normalized * scale
};

// Text format: header "n m", then m lines "u v w" with 0-based ids and a
// positive decimal (or p/q) weight; '#' starts a comment. Parallel edges are
// merged; self-loops are rejected.
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_file(const std::string& path);

struct ParsedDemands {
  DemandVector demands;  // normalized: min positive demand 1
  Weight demand_scale;
};

// Up to n lines "v d" with d >= 0; missing vertices default to 0.
ParsedDemands parse_demands(std::istream& in, int n);
ParsedDemands parse_demands_file(const std::string& path, int n);

void write_graph(std::ostream& out, const WeightedGraph& g);
std::string graph_to_string(const WeightedGraph& g);

void write_demands(std::ostream& out, const DemandVector& d);

// One line per part: part id followed by its vertex ids.
void write_partition(std::ostream& out, const std::vector<VertexSet>& parts);
std::vector<VertexSet> parse_partition(std::istream& in, int n);

struct SummaryRecord {
  int parts = 0;
  Weight deleted_weight = 0;
  Weight psi = 0;
  int iterations = 0;
  Weight alpha_emp = 1;
  int restarts = 0;
};

// Deterministic fields only; timing goes to the console, not the file.
void write_summary(std::ostream& out, const SummaryRecord& record, bool as_json);

void write_decomposition_certificate(std::ostream& out, const Decomposition& dec);

}  // namespace xdecomp
