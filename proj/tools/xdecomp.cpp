#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xdecomp/balcut.hpp"
#include "xdecomp/decomp.hpp"
#include "xdecomp/errors.hpp"
#include "xdecomp/generators.hpp"
#include "xdecomp/io.hpp"
#include "xdecomp/oracle.hpp"
#include "xdecomp/prune.hpp"
#include "xdecomp/tree_cut.hpp"

namespace {

using namespace xdecomp;

constexpr int kExitOk = 0;
constexpr int kExitContractViolation = 1;
constexpr int kExitInputError = 2;

struct CommonOptions {
  std::string graph_path;
  std::string demands = "degree";
  std::string out_prefix;
  bool json = false;
  bool trace = false;
  int threads = 1;
  double c1 = 1.0;
  int t_log_exponent = 2;
  int core_log_exponent = 2;
  int t_cap = 64;
  int base_edges = 64;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_graph = true) {
  if (needs_graph)
    cmd->add_option("graph", opt.graph_path, "graph file (header 'n m', lines 'u v w')")
        ->required();
  cmd->add_option("--demands", opt.demands,
                  "demand file, or 'degree' for d(v) = weighted degree");
  cmd->add_option("--out", opt.out_prefix, "output path prefix");
  cmd->add_flag("--json", opt.json, "summary as JSON");
  cmd->add_flag("--trace", opt.trace, "emit a recursion trace to stderr");
  cmd->add_option("--threads", opt.threads, "worker threads (deterministic reductions)");
  cmd->add_option("--c1", opt.c1, "trim polylog constant");
  cmd->add_option("--c-t", opt.t_log_exponent, "log exponent in the tree-count formula");
  cmd->add_option("--c-j", opt.core_log_exponent, "log exponent in the core-size formula");
  cmd->add_option("--t-cap", opt.t_cap, "cap on the number of j-trees per level");
  cmd->add_option("--base-edges", opt.base_edges,
                  "solve exactly below this edge count");
}

Config make_config(const CommonOptions& opt) {
  Config cfg = Config::with_env_overrides();
  cfg.trace = opt.trace;
  cfg.threads = opt.threads;
  cfg.c1 = opt.c1;
  cfg.t_log_exponent = opt.t_log_exponent;
  cfg.core_log_exponent = opt.core_log_exponent;
  cfg.t_cap = opt.t_cap;
  cfg.balcut_base_edges = opt.base_edges;
  return cfg;
}

struct LoadedInstance {
  WeightedGraph graph;
  DemandVector demands;
  Weight weight_scale;
  Weight demand_scale;
};

LoadedInstance load_instance(const CommonOptions& opt) {
  LoadedInstance inst;
  ParsedGraph pg = parse_graph_file(opt.graph_path);
  inst.graph = std::move(pg.graph);
  inst.weight_scale = pg.weight_scale;
  if (opt.demands == "degree") {
    NormalizedDemands nd = normalize_demands(DemandVector::degrees(inst.graph));
    inst.demands = std::move(nd.demands);
    inst.demand_scale = nd.scale;
  } else {
    ParsedDemands pd = parse_demands_file(opt.demands, inst.graph.n());
    inst.demands = std::move(pd.demands);
    inst.demand_scale = pd.demand_scale;
  }
  return inst;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  return out;
}

void dump_trace(const BalCutTrace& trace) {
  for (const BalCutTraceNode& node : trace) {
    std::cerr << "trace level=" << node.level << " n=" << node.n << " m=" << node.m
              << " t=" << node.t << " j=" << node.j_target
              << " beta=" << weight_to_string(node.beta_emp)
              << " pre_ok=" << node.precondition_ok
              << " provenance=" << to_string(node.provenance)
              << " min_side=" << weight_to_string(node.min_side_demand) << "\n";
  }
}

int run_decompose(const CommonOptions& opt, double eps_in, int r) {
  Config cfg = make_config(opt);
  LoadedInstance inst = load_instance(opt);
  Weight eps = weight_from_double(eps_in);
  BalCutTrace trace;
  auto start = std::chrono::steady_clock::now();
  Decomposition dec = expander_decomposition(inst.graph, inst.demands, eps, r, cfg,
                                             opt.trace ? &trace : nullptr);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (opt.trace) dump_trace(trace);

  SummaryRecord rec;
  rec.parts = static_cast<int>(dec.parts.size());
  rec.deleted_weight = dec.deleted_edge_weight * inst.weight_scale;
  rec.psi = dec.psi_achieved;
  rec.iterations = dec.iterations;
  rec.alpha_emp = dec.alpha_emp_max;
  rec.restarts = dec.restarts;

  std::string prefix = opt.out_prefix.empty() ? "xdecomp_out" : opt.out_prefix;
  {
    auto out = open_out(prefix + ".partition");
    write_partition(out, dec.parts);
  }
  {
    auto out = open_out(prefix + ".cert");
    write_decomposition_certificate(out, dec);
  }
  {
    auto out = open_out(prefix + ".summary");
    write_summary(out, rec, opt.json);
  }
  write_summary(std::cout, rec, opt.json);
  std::cout << "wall_seconds " << seconds << "\n";
  return kExitOk;
}

int run_balcutprune(const CommonOptions& opt, double psi_in, int r) {
  Config cfg = make_config(opt);
  LoadedInstance inst = load_instance(opt);
  BalCutTrace trace;
  auto start = std::chrono::steady_clock::now();
  PruneResult pr = bal_cut_prune(inst.graph, inst.demands, weight_from_double(psi_in), r,
                                 cfg, opt.trace ? &trace : nullptr);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (opt.trace) dump_trace(trace);

  std::string prefix = opt.out_prefix.empty() ? "xdecomp_out" : opt.out_prefix;
  {
    auto out = open_out(prefix + ".partition");
    write_partition(out, {pr.a, pr.b});
  }
  {
    auto out = open_out(prefix + ".cert");
    out << pr.certificate_text;
  }
  std::cout << "case " << (pr.kase == PruneResult::Case::cut ? "cut" : "prune") << "\n"
            << "cut_weight " << weight_to_string(pr.boundary_weight * inst.weight_scale)
            << "\n"
            << "alpha_emp " << weight_to_string(pr.alpha_emp) << "\n"
            << "strong_certified " << pr.strong_certified << "\n"
            << "wall_seconds " << seconds << "\n";
  return kExitOk;
}

int run_balcut(const CommonOptions& opt, double psi_in, double psi_star_in, double b_in,
               int r) {
  Config cfg = make_config(opt);
  LoadedInstance inst = load_instance(opt);
  BalCutParams params = theorem_parameters(inst.graph.m(), inst.graph.capacity_ratio(),
                                           r, weight_from_double(psi_star_in), cfg);
  if (psi_in > 0) params.psi = weight_from_double(psi_in);
  if (b_in > 0) params.b = weight_from_double(b_in);
  BalCutTrace trace;
  MostBalancedCut cut = weighted_bal_cut(inst.graph, inst.demands, params, cfg,
                                         opt.trace ? &trace : nullptr);
  if (opt.trace) dump_trace(trace);
  std::cout << "psi " << weight_to_string(params.psi) << "\n";
  std::cout << "provenance " << to_string(cut.provenance) << "\n";
  if (cut.side.empty()) {
    std::cout << "side empty\n";
  } else {
    std::cout << "sparsity " << weight_to_string(cut.sparsity) << "\n";
    std::cout << "demand " << weight_to_string(cut.demand) << "\n";
    std::cout << "side";
    for (Vertex v : cut.side) std::cout << " " << v;
    std::cout << "\n";
  }
  if (!opt.out_prefix.empty()) {
    auto out = open_out(opt.out_prefix + ".partition");
    write_partition(out, {cut.side, complement_set(inst.graph.n(), cut.side)});
  }
  return kExitOk;
}

int run_treecut(const CommonOptions& opt, double psi_in) {
  Config cfg = make_config(opt);
  (void)cfg;
  LoadedInstance inst = load_instance(opt);
  Vertex root = find_centroid_root(inst.graph, inst.demands);
  RootedTree rt = RootedTree::root_at(inst.graph, inst.demands, root);
  TreeCutStats stats;
  VertexSet side = rooted_tree_bal_cut(rt, weight_from_double(psi_in), &stats);
  std::cout << "root " << root << "\n";
  std::cout << "operations " << stats.operations << "\n";
  std::cout << "side";
  for (Vertex v : side) std::cout << " " << v;
  std::cout << "\n";
  if (!side.empty()) {
    Weight in = inst.demands.of_set(side);
    Weight mn = std::min(in, inst.demands.total() - in);
    std::cout << "sparsity " << weight_to_string(cut_weight(inst.graph, side) / mn)
              << "\n";
  }
  return kExitOk;
}

int run_verify(const CommonOptions& opt, const std::string& partition_path,
               double eps_in, double psi_in) {
  Config cfg = make_config(opt);
  LoadedInstance inst = load_instance(opt);
  std::ifstream pin(partition_path);
  if (!pin) throw Error("cannot open partition file: " + partition_path);
  std::vector<VertexSet> parts = parse_partition(pin, inst.graph.n());
  DecompositionReport report = brute_verify_decomposition(
      inst.graph, inst.demands, parts, weight_from_double(eps_in),
      weight_from_double(psi_in), cfg.oracle_cap);
  std::cout << report.summary() << "\n";
  return report.valid() ? kExitOk : kExitContractViolation;
}

int run_bench(const CommonOptions& opt, const std::string& family,
              const std::vector<int>& sizes, int r, int max_w) {
  Config cfg = make_config(opt);
  std::ostringstream csv;
  csv << "family,m,n,seconds\n";
  for (int size : sizes) {
    WeightedGraph g = gen_family(family, size, 0xBEEF + size);
    NormalizedDemands nd = normalize_demands(DemandVector::degrees(g));
    auto start = std::chrono::steady_clock::now();
    PruneResult pr = bal_cut_prune(g, nd.demands, Weight(1) / 10, r, cfg);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    (void)pr;
    csv << family << "," << g.m() << "," << g.n() << "," << seconds << "\n";
    std::cerr << "bench " << family << " m=" << g.m() << " " << seconds << "s\n";
  }
  (void)max_w;
  if (!opt.out_prefix.empty()) {
    auto out = open_out(opt.out_prefix + ".csv");
    out << csv.str();
  }
  std::cout << csv.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic weighted expander decompositions"};
  app.require_subcommand(1);

  CommonOptions opt;

  auto* decompose_cmd = app.add_subcommand("decompose", "(eps,psi) expander decomposition");
  double eps = 0.5;
  int r = 1;
  decompose_cmd->add_option("--eps", eps, "inter-cluster budget eps")->required();
  decompose_cmd->add_option("--r", r, "recursion depth budget");
  add_common(decompose_cmd, opt);

  auto* bcp_cmd = app.add_subcommand("balcutprune", "balanced cut or certified prune");
  double psi = 0.1;
  bcp_cmd->add_option("--psi", psi, "sparsity parameter")->required();
  bcp_cmd->add_option("--r", r, "recursion depth budget");
  add_common(bcp_cmd, opt);

  auto* balcut_cmd = app.add_subcommand("balcut", "most-balanced sparse cut");
  double psi_star = 0.0, b = 0.0;
  balcut_cmd->add_option("--psi", psi, "acceptance sparsity (0 = from schedule)");
  balcut_cmd->add_option("--psi-star", psi_star, "reference sparsity")->required();
  balcut_cmd->add_option("--b", b, "balance factor (0 = from schedule)");
  balcut_cmd->add_option("--r", r, "recursion depth budget");
  add_common(balcut_cmd, opt);

  auto* treecut_cmd = app.add_subcommand("treecut", "rooted tree balanced cut");
  treecut_cmd->add_option("--psi", psi, "tree sparsity parameter")->required();
  add_common(treecut_cmd, opt);

  auto* verify_cmd = app.add_subcommand("verify", "oracle-verify a partition file");
  std::string partition_path;
  verify_cmd->add_option("--partition", partition_path, "partition file")->required();
  verify_cmd->add_option("--eps", eps, "budget eps")->required();
  verify_cmd->add_option("--psi", psi, "per-part sparsity")->required();
  add_common(verify_cmd, opt);

  auto* bench_cmd = app.add_subcommand("bench", "timing harness, CSV output");
  std::string family = "random";
  std::vector<int> sizes;
  int max_w = 16;
  bench_cmd->add_option("--family", family, "path|cycle|dumbbell|random");
  bench_cmd->add_option("--sizes", sizes, "target edge counts")->required();
  bench_cmd->add_option("--r", r, "recursion depth budget");
  bench_cmd->add_option("--max-weight", max_w, "maximum integer weight");
  add_common(bench_cmd, opt, /*needs_graph=*/false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (decompose_cmd->parsed()) return run_decompose(opt, eps, r);
    if (bcp_cmd->parsed()) return run_balcutprune(opt, psi, r);
    if (balcut_cmd->parsed()) return run_balcut(opt, psi, psi_star, b, r);
    if (treecut_cmd->parsed()) return run_treecut(opt, psi);
    if (verify_cmd->parsed()) return run_verify(opt, partition_path, eps, psi);
    if (bench_cmd->parsed()) return run_bench(opt, family, sizes, r, max_w);
  } catch (const ParseError& e) {
    std::cerr << "input error (line " << e.line_number << "): " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContractViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
