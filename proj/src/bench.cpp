#include "itsdeal/bench.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "itsdeal/runner.hpp"

namespace itsdeal {

namespace fs = std::filesystem;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t sub_seed(std::uint64_t master, const std::string& cell, int trial) {
  return splitmix64(splitmix64(master ^ fnv1a(cell)) + static_cast<std::uint64_t>(trial));
}

std::vector<BenchVariant> expand_roster(const Config& cfg) {
  const auto roster = parse_roster(cfg.get("bench.roster"));
  if (roster.empty()) throw ConfigError("bench.roster is empty");
  const bool sweep = cfg.get("bench.kind") == "sweep_p";

  std::vector<BenchVariant> out;
  for (const auto& entry : roster) {
    const Config base = entry.apply(cfg);
    const std::string label = entry.label();
    if (!sweep) {
      out.push_back({label, label, base});
      continue;
    }
    for (const auto& p : cfg.list("bench.p")) {
      Config at_p = base;
      at_p.set("p", p);
      const std::string lp = label + "_p-" + p;
      if (entry.alg == "pf-higda") {
        for (const auto& s : cfg.list("bench.scenarios")) {
          Config c = at_p;
          c.set("pf.scenario", s);
          out.push_back({lp + "_scenario-" + s, label, c});
        }
      } else if (entry.alg == "ideals") {
        for (const auto& w : cfg.list("bench.omega")) {
          Config c = at_p;
          c.set("omega", w);
          out.push_back({lp + "_omega-" + w, label, c});
        }
      } else {
        out.push_back({lp, label, at_p});
      }
    }
  }
  for (const auto& v : out) home_params(v.cfg);  // surface bad values before any run
  return out;
}

SuccessTable success_probability(const std::vector<TrialOutcome>& outcomes,
                                 const std::vector<double>& thresholds) {
  SuccessTable table;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const auto& o : outcomes) {
    const auto key = std::make_pair(o.algorithm, o.cell);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, table.cells.size()).first;
      for (double t : thresholds) table.cells.push_back({o.algorithm, o.cell, o.k1, t, 0, 0});
    }
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
      SuccessCell& c = table.cells[it->second + j];
      ++c.trials;
      if (o.final_relative_error < c.threshold) ++c.successes;
    }
  }
  return table;
}

std::vector<SweepBest> select_best(const std::vector<TrialOutcome>& outcomes) {
  struct Acc {
    double sum = 0;
    int n = 0;
  };
  // (base, p, cell) -> variant -> accumulated error, in order of first appearance
  std::vector<std::tuple<std::string, double, std::string>> groups;
  std::map<std::tuple<std::string, double, std::string>, std::vector<std::pair<std::string, Acc>>>
      acc;
  for (const auto& o : outcomes) {
    const auto key = std::make_tuple(o.base, o.p, o.cell);
    auto [it, fresh] = acc.try_emplace(key);
    if (fresh) groups.push_back(key);
    auto& vars = it->second;
    auto v = std::find_if(vars.begin(), vars.end(),
                          [&](const auto& e) { return e.first == o.algorithm; });
    if (v == vars.end()) {
      vars.push_back({o.algorithm, {}});
      v = vars.end() - 1;
    }
    // a failed trial counts as the worst possible error
    v->second.sum += std::isfinite(o.final_relative_error) ? o.final_relative_error : kInf;
    ++v->second.n;
  }
  std::vector<SweepBest> out;
  for (const auto& key : groups) {
    SweepBest b;
    std::tie(b.base, b.p, b.cell) = key;
    for (const auto& [name, a] : acc[key]) {
      const double mean = a.sum / a.n;
      if (b.best_variant.empty() || mean < b.mean_final_relative_error) {
        b.best_variant = name;
        b.mean_final_relative_error = mean;
      }
    }
    out.push_back(b);
  }
  return out;
}

namespace {

struct Job {
  const BenchVariant* variant;
  int k1;
  std::string cell;
  int trial;
  std::uint64_t seed;
};

void write_header(std::ostream& os, const Config& cfg) {
  for (const auto& [k, v] : output_header(cfg)) os << "# " << k << '=' << v << '\n';
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
  return os;
}

TrialOutcome run_job(const Job& job, const Config& base_cfg, const fs::path& root,
                     bool write_traces) {
  TrialOutcome o;
  o.algorithm = job.variant->label;
  o.base = job.variant->base;
  o.cell = job.cell;
  o.k1 = job.k1;
  o.trial = job.trial;
  o.seed = job.seed;
  try {
    Config cfg = job.variant->cfg;
    cfg.set("instance.k1", std::to_string(job.k1));
    cfg.set("seed", std::to_string(job.seed));
    cfg.set("problem", "rsr");
    o.p = cfg.real("p");
    const Problem prob = make_problem(cfg);
    const RunTrace trace = run_algorithm(cfg, prob);
    o.status = to_string(trace.status);
    o.message = trace.message;
    o.iterations = trace.rows.empty() ? 0 : trace.rows.back().iter;
    if (!trace.rows.empty()) {
      o.final_relative_error = trace.rows.back().relative_error;
      o.final_objective = trace.rows.back().objective;
    }
    o.elapsed_s = trace.elapsed_s;
    if (write_traces) {
      const fs::path dir = root / o.algorithm / o.cell;
      fs::create_directories(dir);
      const fs::path file = dir / ("trial" + std::to_string(job.trial) + ".csv");
      HeaderEntries h = output_header(cfg);
      h.emplace_back("meta.master_seed", base_cfg.get("seed"));
      h.emplace_back("meta.trial", std::to_string(job.trial));
      write_trace_csv(file.string(), h, trace);
      o.trace_path = file.string();
    }
  } catch (const std::exception& e) {
    o.status = "error";
    o.message = e.what();
  }
  return o;
}

}  // namespace

BenchResult run_bench(const Config& cfg, const BenchOptions& opts) {
  const auto variants = expand_roster(cfg);
  const auto thresholds = cfg.real_list("bench.thresholds");
  for (double t : thresholds)
    if (!(t > 0.0 && t < 1.0)) throw ConfigError("bench.thresholds must lie in (0, 1)");
  const long trials = cfg.integer("bench.trials");
  if (trials < 1) throw ConfigError("bench.trials must be >= 1");
  const auto budget = run_options(cfg).budget;
  if (!budget.max_iters && !budget.time_s)
    throw ConfigError("bench needs a budget: budget_s > 0 or stop.max_iters > 0");
  const std::uint64_t master = cfg.seed("seed");
  const bool write_traces = cfg.flag("bench.write_traces");

  std::vector<int> k1s;
  for (const auto& s : cfg.list("bench.k1")) {
    Config probe;
    probe.set("instance.k1", s);
    k1s.push_back(static_cast<int>(probe.integer("instance.k1")));
  }
  if (k1s.empty()) throw ConfigError("bench.k1 is empty");

  std::vector<Job> jobs;
  for (const auto& v : variants)
    for (int k1 : k1s) {
      const std::string cell = "k1-" + std::to_string(k1);
      for (int t = 0; t < trials; ++t) jobs.push_back({&v, k1, cell, t, sub_seed(master, cell, t)});
    }

  const fs::path root = fs::path(opts.out_root) / cfg.get("bench.name");
  fs::create_directories(root);

  BenchResult result;
  result.outcomes.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      result.outcomes[i] = run_job(jobs[i], cfg, root, write_traces);
      if (opts.log) {
        const auto& o = result.outcomes[i];
        std::lock_guard lock(log_mu);
        opts.log(o.algorithm + " " + o.cell + " trial" + std::to_string(o.trial) + ": " +
                 o.status + " rel_err=" + fmt17(o.final_relative_error));
      }
    }
  };
  const int nthreads = std::max(1, std::min<int>(opts.jobs, static_cast<int>(jobs.size())));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  result.table = success_probability(result.outcomes, thresholds);
  {
    auto os = open_out(root / "summary.csv");
    write_header(os, cfg);
    os << "algorithm,cell,k1,threshold,successes,trials,probability\n";
    for (const auto& c : result.table.cells)
      os << c.algorithm << ',' << c.cell << ',' << c.k1 << ',' << fmt17(c.threshold) << ','
         << c.successes << ',' << c.trials << ',' << fmt17(c.probability()) << '\n';
  }
  {
    const bool clock = cfg.flag("trace.clock");
    auto os = open_out(root / "final.csv");
    write_header(os, cfg);
    os << "algorithm,cell,k1,trial,seed,p,status,iterations,final_relative_error,final_objective,"
          "elapsed_s,iters_per_s\n";
    for (const auto& o : result.outcomes) {
      const double el = clock ? o.elapsed_s : 0.0;
      const double rate = el > 0.0 ? o.iterations / el : kNaN;
      os << o.algorithm << ',' << o.cell << ',' << o.k1 << ',' << o.trial << ',' << o.seed << ','
         << fmt17(o.p) << ',' << o.status << ',' << o.iterations << ','
         << fmt17(o.final_relative_error) << ',' << fmt17(o.final_objective) << ',' << fmt17(el)
         << ',' << fmt17(rate) << '\n';
    }
  }
  {
    const fs::path path = root / "failures.csv";
    std::vector<const TrialOutcome*> failed;
    for (const auto& o : result.outcomes)
      if (o.status == "aborted" || o.status == "error") failed.push_back(&o);
    result.failures = static_cast<int>(failed.size());
    if (failed.empty()) {
      fs::remove(path);
    } else {
      auto os = open_out(path);
      os << "algorithm,cell,trial,seed,status,message\n";
      for (const auto* o : failed) {
        std::string msg = o->message;
        for (char& c : msg)
          if (c == ',' || c == '\n') c = ';';
        os << o->algorithm << ',' << o->cell << ',' << o->trial << ',' << o->seed << ','
           << o->status << ',' << msg << '\n';
      }
    }
  }
  if (cfg.get("bench.kind") == "sweep_p") {
    result.best = select_best(result.outcomes);
    auto os = open_out(root / "sweep_best.csv");
    write_header(os, cfg);
    os << "algorithm,p,cell,best_variant,mean_final_relative_error\n";
    for (const auto& b : result.best)
      os << b.base << ',' << fmt17(b.p) << ',' << b.cell << ',' << b.best_variant << ','
         << fmt17(b.mean_final_relative_error) << '\n';
  }
  return result;
}

BenchResult run_comparison(Config cfg, const BenchOptions& opts) {
  cfg.set("bench.kind", "comparison");
  return run_bench(cfg, opts);
}

BenchResult sweep_p(Config cfg, const std::vector<double>& p_list, const BenchOptions& opts) {
  std::string s;
  for (double p : p_list) s += (s.empty() ? "" : ",") + fmt17(p);
  cfg.set("bench.kind", "sweep_p");
  cfg.set("bench.p", s);
  return run_bench(cfg, opts);
}

}  // namespace itsdeal
