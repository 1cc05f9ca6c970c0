#include "itsdeal/runner.hpp"

#include <fstream>

namespace itsdeal {

namespace {

std::optional<double> safeguard_ell0(const Config& cfg, const WeaklyConvexFn& f) {
  if (auto v = cfg.opt_real("safeguard.ell0")) return v;
  return f.lower_bound;
}

Vec resolve_x0(const Config& cfg, int dim, double fill) {
  if (cfg.get("x0") == "auto") return Vec::Constant(dim, fill);
  const auto vals = cfg.real_list("x0");
  if (vals.size() == 1) return Vec::Constant(dim, vals[0]);
  if (static_cast<int>(vals.size()) != dim)
    throw ConfigError("x0 has " + std::to_string(vals.size()) + " entries, expected " +
                      std::to_string(dim));
  return Eigen::Map<const Vec>(vals.data(), dim);
}

}  // namespace

Problem make_problem(const Config& cfg, std::shared_ptr<const SparseRecoveryInstance> inst) {
  Problem prob;
  const std::string& name = cfg.get("problem");
  if (name == "rsr") {
    if (!inst) throw ConfigError("problem rsr needs an instance");
    prob.instance = inst;
    prob.f = robust_sparse_recovery(inst);
    prob.x_true = inst->x_true;
    prob.x0 = resolve_x0(cfg, inst->params.n, 0.0);
    return prob;
  }
  const long dim = cfg.integer("dim");
  if (dim < 1) throw ConfigError("dim must be >= 1");
  const int d = static_cast<int>(dim);
  if (name == "quadratic") {
    prob.f = half_squared_norm(d);
  } else if (name == "quartic") {
    if (d != 1) throw ConfigError("problem quartic is one-dimensional");
    prob.f = quartic_well();
  } else if (name == "l1") {
    prob.f = l1_norm(d);
  } else if (name == "clipped") {
    prob.f = clipped_quadratic_sum(d, cfg.real("instance.sigma"));
  } else {
    prob.f = zero_function(d);
  }
  prob.x0 = resolve_x0(cfg, d, 2.0);
  return prob;
}

Problem make_problem(const Config& cfg) {
  if (cfg.get("problem") != "rsr") return make_problem(cfg, nullptr);
  const std::string& file = cfg.get("instance.file");
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open instance file '" + file + "'");
    return make_problem(cfg, std::make_shared<const SparseRecoveryInstance>(read_instance(in)));
  }
  return make_problem(
      cfg, std::make_shared<const SparseRecoveryInstance>(generate_instance(instance_params(cfg))));
}

SmoothnessBounds resolve_higda_bounds(const Config& cfg, const WeaklyConvexFn& f) {
  if (auto calL = cfg.opt_real("higda.calL")) {
    if (!(*calL > 0.0)) throw ConfigError("higda.calL must be positive");
    SmoothnessBounds b;
    b.calL_p = *calL;
    return b;
  }
  const auto radius = cfg.opt_real("safeguard.radius");
  const auto gmax = cfg.opt_real("safeguard.gamma_max");
  const auto ell0 = safeguard_ell0(cfg, f);
  if (!radius || !gmax || !ell0)
    throw ConfigError(
        "higda needs the Hölder constant of the envelope gradient: set higda.calL, or "
        "safeguard.radius and safeguard.gamma_max (and safeguard.ell0 when f has no known "
        "lower bound)");
  return safeguarded_bounds(f, home_params(cfg), *radius, *gmax, *ell0);
}

RunTrace run_algorithm(const Config& cfg, const Problem& prob) {
  const Algorithm alg = algorithm_from_string(cfg.get("alg"));
  RunOptions opts = run_options(cfg);
  opts.x_true = prob.x_true;

  if (alg == Algorithm::SGDSS || alg == Algorithm::SGCSS)
    return subgradient_run(prob.f, subgradient_config(cfg), prob.x0, opts);

  const HomeParams P = home_params(cfg);
  if (alg != Algorithm::HiGDA && cfg.opt_real("safeguard.radius")) {
    const auto gmax = cfg.opt_real("safeguard.gamma_max");
    const auto ell0 = safeguard_ell0(cfg, prob.f);
    if (!gmax || !ell0)
      throw ConfigError("safeguarded mode needs safeguard.gamma_max and safeguard.ell0");
    safeguarded_bounds(prob.f, P, *cfg.opt_real("safeguard.radius"), *gmax, *ell0);
  }
  switch (alg) {
    case Algorithm::HiGDA:
      return higda_run(prob.f, P, prob.x0, resolve_higda_bounds(cfg, prob.f), opts);
    case Algorithm::PFHiGDA: return pf_higda_run(prob.f, P, prob.x0, opts);
    default: return ideals_run(prob.f, P, prob.x0, opts);
  }
}

HeaderEntries output_header(const Config& cfg) {
  HeaderEntries h = cfg.entries();
  h.emplace_back("meta.format", "itsdeal-trace-v1");
  h.emplace_back("meta.build", build_describe());
  return h;
}

}  // namespace itsdeal
