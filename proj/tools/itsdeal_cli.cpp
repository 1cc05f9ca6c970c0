#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "itsdeal/bench.hpp"
#include "itsdeal/config.hpp"
#include "itsdeal/runner.hpp"
#include "itsdeal/verify.hpp"

namespace {

using namespace itsdeal;

enum Exit { kOk = 0, kFailure = 1, kConfig = 2, kAbort = 3 };

struct CommonFlags {
  std::string config_file;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  std::optional<double> budget_s;
  std::optional<std::string> p, alg, scenario, omega, problem, instance;
  std::optional<long> max_iters;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_file, "key = value config file");
  cmd->add_option("--set", f.sets, "override one config key (key=value), repeatable");
  cmd->add_option("--seed", f.seed, "instance seed (master seed for bench)");
  cmd->add_option("--budget-s", f.budget_s, "wall-clock budget per run in seconds, 0 = none");
  cmd->add_option("--max-iters", f.max_iters, "iteration budget per run, 0 = none");
  cmd->add_option("--p", f.p, "envelope power in (1, 2]");
  cmd->add_option("--alg", f.alg, "higda | pf-higda | ideals | sg-dss | sg-css");
  cmd->add_option("--scenario", f.scenario, "S1 | S2 | S3 (pf-higda)");
  cmd->add_option("--omega", f.omega, "IDEALS direction exponent or 'auto'");
  cmd->add_option("--problem", f.problem, "rsr | quadratic | quartic | l1 | clipped | zero");
  cmd->add_option("--instance", f.instance, "read the rsr instance from this file");
}

Config resolve(const CommonFlags& f) {
  Config cfg;
  if (!f.config_file.empty()) cfg.load_file(f.config_file);
  for (const auto& s : f.sets) cfg.set_assignment(s);
  if (f.seed) cfg.set("seed", std::to_string(*f.seed));
  if (f.budget_s) cfg.set("budget_s", fmt17(*f.budget_s));
  if (f.max_iters) cfg.set("stop.max_iters", std::to_string(*f.max_iters));
  if (f.p) cfg.set("p", *f.p);
  if (f.alg) cfg.set("alg", *f.alg);
  if (f.scenario) cfg.set("pf.scenario", *f.scenario);
  if (f.omega) cfg.set("omega", *f.omega);
  if (f.problem) cfg.set("problem", *f.problem);
  if (f.instance) cfg.set("instance.file", *f.instance);
  return cfg;
}

int cmd_solve(const CommonFlags& flags, const std::string& out) {
  const Config cfg = resolve(flags);
  const Problem prob = make_problem(cfg);
  const RunTrace trace = run_algorithm(cfg, prob);
  const HeaderEntries header = output_header(cfg);
  if (out == "-") {
    write_trace_csv(std::cout, header, trace);
  } else {
    write_trace_csv(out, header, trace);
  }
  const auto& last = trace.rows.back();
  std::cerr << to_string(trace.status) << ": " << last.iter << " iterations, value "
            << fmt17(last.value_eps) << ", |g| " << fmt17(last.grad_eps_norm);
  if (prob.x_true) std::cerr << ", relative error " << fmt17(last.relative_error);
  std::cerr << '\n';
  if (trace.status == RunStatus::Aborted) {
    std::cerr << "solver aborted: " << trace.message << '\n';
    return kAbort;
  }
  return kOk;
}

int cmd_bench(const CommonFlags& flags, const std::string& out, int jobs, bool quiet) {
  const Config cfg = resolve(flags);
  BenchOptions opts;
  opts.out_root = out;
  opts.jobs = jobs;
  if (!quiet) opts.log = [](const std::string& s) { std::cerr << s << '\n'; };
  const BenchResult res = run_bench(cfg, opts);
  std::cerr << "wrote " << out << "/" << cfg.get("bench.name") << "/summary.csv ("
            << res.outcomes.size() << " trials)\n";
  if (res.failures > 0) {
    std::cerr << res.failures << " trial(s) failed; see failures.csv\n";
    return kAbort;
  }
  return kOk;
}

int cmd_verify(const std::string& fixture, const std::string& out) {
  VerifyOptions opts;
  opts.fixture = fixture;
  const auto groups = run_verify(opts);
  const std::string report = verify_report_json(groups);
  if (out.empty() || out == "-") {
    std::cout << report << '\n';
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write '" + out + "'");
    os << report << '\n';
  }
  for (const auto& g : groups)
    if (!g.passed) return kFailure;
  return kOk;
}

int cmd_gen_instance(const CommonFlags& flags, const std::string& out) {
  const Config cfg = resolve(flags);
  const SparseRecoveryInstance inst = generate_instance(instance_params(cfg));
  if (out == "-") {
    write_instance(std::cout, inst);
    return kOk;
  }
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot write '" + out + "'");
  write_instance(os, inst);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inexact two-level smoothing descent for weakly convex problems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(build_describe()));

  CommonFlags solve_flags, bench_flags, gen_flags;
  std::string solve_out = "-", bench_out = "out", verify_out = "-", gen_out = "-";
  std::string fixture;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool quiet = false;

  auto* solve = app.add_subcommand("solve", "run one algorithm and write its trace CSV");
  add_common(solve, solve_flags);
  solve->add_option("--out", solve_out, "trace CSV path ('-' for stdout)");

  auto* bench = app.add_subcommand("bench", "run an experiment roster");
  add_common(bench, bench_flags);
  bench->add_option("--out", bench_out, "output root directory");
  bench->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  bench->add_flag("--quiet", quiet, "no per-trial progress lines");

  auto* verify = app.add_subcommand("verify", "run the invariant suites, print a JSON report");
  verify->add_option("--fixture", fixture, "inject a fixture: delta-violation")
      ->check(CLI::IsMember({"", "delta-violation"}));
  verify->add_option("--out", verify_out, "report path ('-' for stdout)");

  auto* gen = app.add_subcommand("gen-instance", "write a robust sparse-recovery instance");
  add_common(gen, gen_flags);
  gen->add_option("--out", gen_out, "instance path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*solve) return cmd_solve(solve_flags, solve_out);
    if (*bench) return cmd_bench(bench_flags, bench_out, jobs, quiet);
    if (*verify) return cmd_verify(fixture, verify_out);
    if (*gen) return cmd_gen_instance(gen_flags, gen_out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const AdmissibilityError& e) {
    std::cerr << "inadmissible parameters: " << e.what() << '\n';
    return kConfig;
  } catch (const DomainError& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kConfig;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
