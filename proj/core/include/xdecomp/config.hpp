#pragma once

#include <cstdlib>
#include <string>

namespace xdecomp {

// Knobs for every constant the algorithms leave unspecified. Defaults follow
// the schedule shapes used throughout; tests pin their own values.
struct Config {
  // Exponent of the log(m) factor in the tree-count formula
  // t = ceil(m0^(1/r) * log2(m)^t_log_exponent * log2(U)^2).
  int t_log_exponent = 2;
  // Cap on t; the formula easily exceeds any useful count on small inputs.
  int t_cap = 64;
  // Exponent of the log(m) factor in the core-size formula
  // j_target = ceil(m * log2(m)^core_log_exponent / t).
  int core_log_exponent = 2;

  // Most-balanced-cut recursion solves instances with at most this many
  // edges (or exhausted depth budget) exactly via the oracle.
  int balcut_base_edges = 64;

  // A priori budgets for the sparsifier approximation factor and the
  // j-tree average congestion, used when fixing parameter schedules ahead
  // of the run. Runtime certificates are checked against them.
  double alpha_budget = 4.0;
  double beta_budget_factor = 10.0;  // beta budget = factor * log2(m)

  // Universal constant in the trim polylog gap (log(mU))^(c1 * r^3).
  double c1 = 1.0;

  // Constant c in psi = eps / (c * alpha * log(mU)) for the decomposition,
  // doubled on budget violation up to max_restarts times.
  double c_budget = 4.0;
  int max_restarts = 3;

  // Brute-force oracle instance cap (number of vertices).
  int oracle_cap = 16;

  // Constant c in the sparsifier size bound max(budget, c * n log n log U).
  double sparsify_size_const = 1.0;

  // Enumerate all cuts exactly when verifying congestion/approximation on
  // graphs up to this many vertices; sample above it.
  int exact_cut_cap = 16;
  // Store explicit embedding paths only up to this many vertices.
  int path_store_cap = 4096;

  int threads = 1;
  bool trace = false;

  static Config with_env_overrides() {
    Config cfg;
    if (const char* cap = std::getenv("XDECOMP_ORACLE_CAP")) {
      cfg.oracle_cap = std::atoi(cap);
    }
    return cfg;
  }
};

}  // namespace xdecomp
