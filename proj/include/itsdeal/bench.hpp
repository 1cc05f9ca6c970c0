#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "itsdeal/config.hpp"

namespace itsdeal {

/// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);
/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& s);
/// Seed of trial t in cell `cell`: splitmix64(splitmix64(master ^ fnv1a(cell)) + t).
/// Independent of the algorithm, so every roster entry sees the same instances.
std::uint64_t sub_seed(std::uint64_t master, const std::string& cell, int trial);

/// One roster entry after sweep expansion.
struct BenchVariant {
  std::string label;  // output directory name
  std::string base;   // roster label before expansion
  Config cfg;
};

struct TrialOutcome {
  std::string algorithm;  // variant label
  std::string base;
  std::string cell;
  int k1 = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  double p = 0;
  std::string status;  // converged | budget | aborted | error
  std::string message;
  long iterations = 0;
  double final_relative_error = kNaN;
  double final_objective = kNaN;
  double elapsed_s = 0;
  std::string trace_path;
};

struct SuccessCell {
  std::string algorithm;
  std::string cell;
  int k1 = 0;
  double threshold = 0;
  int successes = 0;
  int trials = 0;
  double probability() const { return trials ? static_cast<double>(successes) / trials : 0.0; }
};

struct SuccessTable {
  std::vector<SuccessCell> cells;
};

struct SweepBest {
  std::string base;
  double p = 0;
  std::string cell;
  std::string best_variant;
  double mean_final_relative_error = kNaN;
};

struct BenchResult {
  std::vector<TrialOutcome> outcomes;  // in job order, independent of --jobs
  SuccessTable table;
  std::vector<SweepBest> best;  // sweep_p only
  int failures = 0;
};

/// Roster entries of cfg, expanded over bench.p and the scenario / omega grids for sweeps.
std::vector<BenchVariant> expand_roster(const Config& cfg);

/// Fraction of trials with final relative error below each threshold, per (algorithm, cell).
/// Rows follow the order of first appearance in `outcomes`.
SuccessTable success_probability(const std::vector<TrialOutcome>& outcomes,
                                 const std::vector<double>& thresholds);

/// Variant with the smallest mean final relative error per (base, p, cell).
std::vector<SweepBest> select_best(const std::vector<TrialOutcome>& outcomes);

struct BenchOptions {
  std::string out_root = "out";
  int jobs = 1;
  std::function<void(const std::string&)> log;
};

/// Runs every (variant, k1, trial) job and writes
///   <out_root>/<bench.name>/<variant>/<cell>/trial<t>.csv, summary.csv, final.csv,
///   sweep_best.csv (sweeps) and failures.csv (when some trial failed).
BenchResult run_bench(const Config& cfg, const BenchOptions& opts);

/// run_bench with bench.kind forced to comparison / sweep_p.
BenchResult run_comparison(Config cfg, const BenchOptions& opts);
BenchResult sweep_p(Config cfg, const std::vector<double>& p_list, const BenchOptions& opts);

}  // namespace itsdeal
