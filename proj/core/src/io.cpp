#include "xdecomp/io.hpp"

#include <fstream>
#include <sstream>

#include "xdecomp/errors.hpp"

namespace xdecomp {

namespace {

// Strips comments and returns the significant fields of the next line, with
// its 1-based line number.
bool next_fields(std::istream& in, std::vector<std::string>& fields, int& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    fields.clear();
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) fields.push_back(tok);
    if (!fields.empty()) return true;
  }
  return false;
}

int parse_index(const std::string& s, int line_no) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw MalformedLine("expected an integer, got '" + s + "'", line_no);
  }
}

Weight parse_weight_field(const std::string& s, int line_no) {
  try {
    return weight_from_string(s);
  } catch (const std::exception&) {
    throw MalformedLine("expected a number, got '" + s + "'", line_no);
  }
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
  int line_no = 0;
  std::vector<std::string> fields;
  if (!next_fields(in, fields, line_no))
    throw MalformedLine("missing header line 'n m'", line_no);
  if (fields.size() != 2) throw MalformedLine("header must be 'n m'", line_no);
  int n = parse_index(fields[0], line_no);
  int m = parse_index(fields[1], line_no);
  if (n < 1 || m < 0) throw MalformedLine("invalid graph dimensions", line_no);

  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!next_fields(in, fields, line_no))
      throw MalformedLine("missing edge line", line_no + 1);
    if (fields.size() != 3) throw MalformedLine("edge line must be 'u v w'", line_no);
    int u = parse_index(fields[0], line_no);
    int v = parse_index(fields[1], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw OutOfRange("vertex id out of range", line_no);
    if (u == v) throw SelfLoopError("self-loop", line_no);
    Weight w = parse_weight_field(fields[2], line_no);
    if (!(w > 0)) throw NonPositiveWeight("edge weight must be positive", line_no);
    edges.push_back({u, v, w});
  }
  if (next_fields(in, fields, line_no))
    throw MalformedLine("trailing content after edge list", line_no);

  ParsedGraph out;
  NormalizedGraph norm = normalize_graph(WeightedGraph::from_edges(n, std::move(edges)));
  out.graph = std::move(norm.graph);
  out.weight_scale = norm.scale;
  return out;
}

ParsedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  return parse_graph(in);
}

ParsedDemands parse_demands(std::istream& in, int n) {
  int line_no = 0;
  std::vector<std::string> fields;
  std::vector<Weight> d(n, Weight(0));
  std::vector<char> seen(n, 0);
  while (next_fields(in, fields, line_no)) {
    if (fields.size() != 2) throw MalformedLine("demand line must be 'v d'", line_no);
    int v = parse_index(fields[0], line_no);
    if (v < 0 || v >= n) throw OutOfRange("vertex id out of range", line_no);
    if (seen[v]) throw DuplicateEntry("duplicate demand entry", line_no);
    seen[v] = 1;
    Weight val = parse_weight_field(fields[1], line_no);
    if (val < 0) throw NegativeDemand("demand must be non-negative", line_no);
    d[v] = val;
  }
  ParsedDemands out;
  NormalizedDemands norm = normalize_demands(DemandVector(std::move(d)));
  out.demands = std::move(norm.demands);
  out.demand_scale = norm.scale;
  return out;
}

ParsedDemands parse_demands_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open demand file: " + path);
  return parse_demands(in, n);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.n() << " " << g.m() << "\n";
  for (const Edge& e : g.edges())
    out << e.u << " " << e.v << " " << weight_to_string(e.w) << "\n";
}

std::string graph_to_string(const WeightedGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

void write_demands(std::ostream& out, const DemandVector& d) {
  for (Vertex v = 0; v < d.n(); ++v)
    out << v << " " << weight_to_string(d[v]) << "\n";
}

void write_partition(std::ostream& out, const std::vector<VertexSet>& parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    out << i;
    for (Vertex v : parts[i]) out << " " << v;
    out << "\n";
  }
}

std::vector<VertexSet> parse_partition(std::istream& in, int n) {
  int line_no = 0;
  std::vector<std::string> fields;
  std::vector<VertexSet> parts;
  while (next_fields(in, fields, line_no)) {
    if (fields.size() < 2) throw MalformedLine("partition line needs id + vertices", line_no);
    VertexSet part;
    for (size_t i = 1; i < fields.size(); ++i) {
      int v = parse_index(fields[i], line_no);
      if (v < 0 || v >= n) throw OutOfRange("vertex id out of range", line_no);
      part.push_back(v);
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

void write_summary(std::ostream& out, const SummaryRecord& r, bool as_json) {
  if (as_json) {
    out << "{\"parts\":" << r.parts << ",\"deleted_weight\":\""
        << weight_to_string(r.deleted_weight) << "\",\"psi\":\""
        << weight_to_string(r.psi) << "\",\"iterations\":" << r.iterations
        << ",\"alpha_emp\":\"" << weight_to_string(r.alpha_emp)
        << "\",\"restarts\":" << r.restarts << "}\n";
  } else {
    out << "parts " << r.parts << "\n";
    out << "deleted_weight " << weight_to_string(r.deleted_weight) << "\n";
    out << "psi " << weight_to_string(r.psi) << "\n";
    out << "iterations " << r.iterations << "\n";
    out << "alpha_emp " << weight_to_string(r.alpha_emp) << "\n";
    out << "restarts " << r.restarts << "\n";
  }
}

void write_decomposition_certificate(std::ostream& out, const Decomposition& dec) {
  out << "parts " << dec.parts.size() << "\n";
  out << "deleted_weight " << weight_to_string(dec.deleted_edge_weight) << "\n";
  out << "psi " << weight_to_string(dec.psi_achieved) << "\n";
  out << "iterations " << dec.iterations << "\n";
  out << "alpha_emp " << weight_to_string(dec.alpha_emp_max) << "\n";
  out << "c_used " << dec.c_used << "\n";
  for (size_t i = 0; i < dec.parts.size(); ++i) {
    const PartCertificate& pc = dec.per_part_certificates[i];
    out << "part " << i << " size " << dec.parts[i].size() << " kind ";
    switch (pc.kind) {
      case PartCertificate::Kind::prune_certified: out << "prune_certified"; break;
      case PartCertificate::Kind::oracle_verified: out << "oracle_verified"; break;
      case PartCertificate::Kind::zero_demand: out << "zero_demand"; break;
      case PartCertificate::Kind::singleton: out << "singleton"; break;
    }
    out << " strong " << (pc.strong ? 1 : 0);
    if (pc.weak_threshold > 0)
      out << " weak_threshold " << weight_to_string(pc.weak_threshold);
    out << "\n";
  }
}

}  // namespace xdecomp
