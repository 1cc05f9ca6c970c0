#include "itsdeal/itsdeal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

namespace itsdeal {

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::S1: return "S1";
    case Scenario::S2: return "S2";
    case Scenario::S3: return "S3";
  }
  return "?";
}

Scenario scenario_from_string(const std::string& s) {
  if (s == "S1" || s == "s1" || s == "1") return Scenario::S1;
  if (s == "S2" || s == "s2" || s == "2") return Scenario::S2;
  if (s == "S3" || s == "s3" || s == "3") return Scenario::S3;
  throw ConfigError("unknown scenario '" + s + "' (S1|S2|S3)");
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::HiGDA: return "higda";
    case Algorithm::PFHiGDA: return "pf-higda";
    case Algorithm::IDEALS: return "ideals";
    case Algorithm::SGDSS: return "sg-dss";
    case Algorithm::SGCSS: return "sg-css";
  }
  return "?";
}

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "higda") return Algorithm::HiGDA;
  if (s == "pf-higda" || s == "pfhigda") return Algorithm::PFHiGDA;
  if (s == "ideals") return Algorithm::IDEALS;
  if (s == "sg-dss") return Algorithm::SGDSS;
  if (s == "sg-css") return Algorithm::SGCSS;
  throw ConfigError("unknown algorithm '" + s + "' (higda|pf-higda|ideals|sg-dss|sg-css)");
}

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Converged: return "converged";
    case RunStatus::BudgetExhausted: return "budget";
    case RunStatus::Aborted: return "aborted";
  }
  return "?";
}

double EpsSchedule::total() const { return scale * std::numbers::pi * std::numbers::pi / 6.0; }

double HomeParams::resolved_mu() const { return std::isnan(mu) ? default_mu(p) : mu; }

double HomeParams::descent_constant() const {
  return c1 - std::pow(2.0, 2.0 - p) * std::pow(resolved_mu(), p - 1.0) * c2;
}

void HomeParams::validate() const {
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("p must lie in (1, 2], got " + fmt17(p));
  if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
  if (!(c1 > 0.0) || !(c2 > 0.0)) throw ConfigError("c1 and c2 must be positive");
  const double m = resolved_mu();
  if (!(m > 0.0)) throw ConfigError("mu must be positive");
  if (!(descent_constant() > 0.0))
    throw AdmissibilityError("mu = " + fmt17(m) + " violates mu < (c1/(c2 2^{2-p}))^{1/(p-1)} = " +
                             fmt17(std::pow(c1 / (c2 * std::pow(2.0, 2.0 - p)), 1.0 / (p - 1.0))));
  if (!std::isnan(omega) && !(omega >= 0.0)) throw ConfigError("omega must be nonnegative");
  if (!(eps.scale > 0.0)) throw ConfigError("eps.scale must be positive");
  if (!(armijo_lambda > 0.0 && armijo_lambda < 1.0))
    throw ConfigError("armijo.lambda must lie in (0, 1)");
  if (!(armijo_upsilon > 0.0 && armijo_upsilon < 1.0))
    throw ConfigError("armijo.upsilon must lie in (0, 1)");
  if (max_backtracks < 1) throw ConfigError("armijo.max_backtracks must be >= 1");
  if (!(lbar_growth > 1.0)) throw ConfigError("pf.growth must exceed 1");
  if (!(L0 > 0.0)) throw ConfigError("pf.L0 must be positive");
  if (max_trials < 1) throw ConfigError("pf.max_trials must be >= 1");
  if (!(grad_tol >= 0.0)) throw ConfigError("stop.grad_tol must be nonnegative");
  inner.validate();
}

double holder_omega(double p) { return (3.0 - p) / (p - 1.0); }
double ideals_default_omega(double p) { return (2.0 - p) / (p - 1.0); }

std::string RunTrace::header_value(const std::string& key) const {
  for (const auto& [k, v] : header)
    if (k == key) return v;
  return {};
}

std::vector<std::pair<std::string, std::string>> describe(const HomeParams& params) {
  return {
      {"p", fmt17(params.p)},
      {"gamma", fmt17(params.gamma)},
      {"c1", fmt17(params.c1)},
      {"c2", fmt17(params.c2)},
      {"mu", fmt17(params.resolved_mu())},
      {"eps.scale", fmt17(params.eps.scale)},
      {"armijo.lambda", fmt17(params.armijo_lambda)},
      {"armijo.upsilon", fmt17(params.armijo_upsilon)},
      {"armijo.max_backtracks", std::to_string(params.max_backtracks)},
      {"pf.scenario", to_string(params.scenario)},
      {"pf.growth", fmt17(params.lbar_growth)},
      {"pf.L0", fmt17(params.L0)},
      {"pf.max_trials", std::to_string(params.max_trials)},
      {"inner.kind", to_string(params.inner.kind)},
      {"inner.alpha0", fmt17(params.inner.alpha0)},
      {"inner.max_iters", std::to_string(params.inner.max_iters)},
      {"inner.move_tol", fmt17(params.inner.move_tol)},
      {"stop.grad_tol", fmt17(params.grad_tol)},
  };
}

// Directions ---------------------------------------------------------------

Vec direction_power(const Vec& g, double omega) {
  const double n = g.norm();
  if (n == 0.0) return Vec::Zero(g.size());
  return -std::pow(n, omega) * g;
}

bool check_direction_pair(double g_dot_d, double g_norm, double d_norm, double c1, double c2,
                          double vartheta) {
  const double slack = 1e-12;
  const double a = -c1 * std::pow(g_norm, 1.0 + vartheta);
  const double b = c2 * std::pow(g_norm, vartheta);
  return g_dot_d <= a + slack * std::max(1.0, std::abs(a)) &&
         d_norm <= b + slack * std::max(1.0, b);
}

bool check_direction_pair(const Vec& g, const Vec& d, double c1, double c2, double vartheta) {
  return check_direction_pair(g.dot(d), g.norm(), d.norm(), c1, c2, vartheta);
}

DirectionRule power_direction(double omega) {
  DirectionRule r;
  r.name = "power(" + fmt17(omega) + ")";
  r.vartheta = omega + 1.0;
  r.apply = [omega](const Vec& g) { return direction_power(g, omega); };
  return r;
}

// Step rules ---------------------------------------------------------------

namespace {

double step_cap(const HomeParams& P) { return std::pow(P.gamma, 2.0 / (P.p - 1.0)) / P.c2; }

/// alpha (C - 2L/(p+1) alpha^{(p-1)/2} c2^{(p+1)/2}), the Hölder descent coefficient.
double holder_coef(const HomeParams& P, double alpha, double L) {
  const double p = P.p;
  return alpha * (P.descent_constant() -
                  2.0 * L / (p + 1.0) * std::pow(alpha, (p - 1.0) / 2.0) *
                      std::pow(P.c2, (p + 1.0) / 2.0));
}

class FixedStep final : public StepRule {
 public:
  FixedStep(const HomeParams& P, double alpha, double calL)
      : alpha_(alpha), calL_(calL), coef_(holder_coef(P, alpha, calL)) {}
  std::string name() const override { return "higda"; }
  StepOutcome step(const StepContext& ctx, const OracleFn& oracle) override {
    StepOutcome out;
    out.alpha = alpha_;
    out.Lbar = calL_;
    out.decrease_coef = coef_;
    out.x_next = ctx.x + alpha_ * ctx.d;
    out.oracle_next = oracle(out.x_next, ctx.eps_next);
    out.oracle_calls = 1;
    return out;
  }

 private:
  double alpha_, calL_, coef_;
};

class HolderBacktracking final : public StepRule {
 public:
  explicit HolderBacktracking(const HomeParams& P) : P_(P), L_accepted_(P.L0) {}
  std::string name() const override { return "pf-higda"; }

  StepOutcome step(const StepContext& ctx, const OracleFn& oracle) override {
    const double p = P_.p;
    const double C = P_.descent_constant();
    const double cap = step_cap(P_);
    const double expo = 2.0 / (p - 1.0);
    const double c2pow = std::pow(P_.c2, (p + 1.0) / 2.0);
    const double gpow = std::pow(ctx.g_norm, (p + 1.0) / (p - 1.0));
    const Vec& g = ctx.oracle.grad_eps;

    double base = P_.L0;
    if (P_.scenario == Scenario::S2) {
      base = L_accepted_;
    } else if (P_.scenario == Scenario::S3 && prev_x_) {
      const double dx = (ctx.x - *prev_x_).norm();
      base = dx > 0.0 ? (g - *prev_g_).norm() / std::pow(dx, (p - 1.0) / 2.0) : P_.L0;
    }

    StepOutcome out;
    for (int i = 0; i < P_.max_trials; ++i) {
      double Lbar = std::pow(P_.lbar_growth, i) * base;
      if (Lbar == 0.0 && i > 0) Lbar = std::pow(P_.lbar_growth, i) * P_.L0;
      const double alpha = Lbar > 0.0 ? std::min(cap, std::pow(C / (c2pow * Lbar), expo)) : cap;
      const double coef = holder_coef(P_, alpha, Lbar);
      Vec xh = ctx.x + alpha * ctx.d;
      InexactOracle o = oracle(xh, ctx.eps_next);
      ++out.oracle_calls;
      out.alpha = alpha;
      out.Lbar = Lbar;
      out.backtracks = i;
      out.decrease_coef = coef;
      if (o.value_eps <= ctx.oracle.value_eps - coef * gpow + ctx.eps_next) {
        L_accepted_ = Lbar;
        prev_x_ = ctx.x;
        prev_g_ = g;
        out.x_next = std::move(xh);
        out.oracle_next = std::move(o);
        return out;
      }
    }
    out.ok = false;
    out.failure = "pf-higda: no acceptable Lbar after " + std::to_string(P_.max_trials) +
                  " trials at iteration " + std::to_string(ctx.k);
    return out;
  }

 private:
  HomeParams P_;
  double L_accepted_;
  std::optional<Vec> prev_x_, prev_g_;
};

class Armijo final : public StepRule {
 public:
  explicit Armijo(const HomeParams& P) : P_(P) {}
  std::string name() const override { return "ideals"; }

  StepOutcome step(const StepContext& ctx, const OracleFn& oracle) override {
    const double lc = P_.armijo_lambda * P_.descent_constant();
    const double gpow = std::pow(ctx.g_norm, 1.0 + ctx.vartheta);
    StepOutcome out;
    double alpha = 1.0;
    for (int b = 0; b <= P_.max_backtracks; ++b) {
      Vec xh = ctx.x + alpha * ctx.d;
      InexactOracle o = oracle(xh, ctx.eps_next);
      ++out.oracle_calls;
      out.alpha = alpha;
      out.backtracks = b;
      out.decrease_coef = alpha * lc;
      if (o.value_eps <= ctx.oracle.value_eps - alpha * lc * gpow + ctx.eps_next) {
        out.x_next = std::move(xh);
        out.oracle_next = std::move(o);
        return out;
      }
      alpha *= P_.armijo_upsilon;
    }
    out.ok = false;
    out.failure = "ideals: Armijo test failed after " + std::to_string(P_.max_backtracks) +
                  " backtracks at iteration " + std::to_string(ctx.k);
    return out;
  }

 private:
  HomeParams P_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool budget_hit(const Budget& b, long k, double elapsed) {
  if (b.max_iters && k >= *b.max_iters) return true;
  if (b.time_s && elapsed >= *b.time_s) return true;
  return false;
}

void push_row(RunTrace& trace, const TraceRow& row, const RunOptions& opts, bool last) {
  if (last || opts.row_stride <= 1 || row.iter % opts.row_stride == 0) trace.rows.push_back(row);
}

}  // namespace

double higda_step_size(const HomeParams& params, double calL_p) {
  const double C = params.descent_constant();
  if (!(C > 0.0))
    throw AdmissibilityError("higda_step_size: c1 - 2^{2-p} mu^{p-1} c2 must be positive");
  if (!(calL_p > 0.0)) throw DomainError("higda_step_size: calL_p must be positive");
  const double p = params.p;
  const double t = (p + 1.0) * C / (2.0 * std::pow(params.c2, (p + 1.0) / 2.0) * calL_p);
  return std::min(step_cap(params), std::pow(t, 2.0 / (p - 1.0)));
}

std::unique_ptr<StepRule> make_fixed_step(const HomeParams& params, double alpha, double calL_p) {
  return std::make_unique<FixedStep>(params, alpha, calL_p);
}
std::unique_ptr<StepRule> make_holder_backtracking(const HomeParams& params) {
  return std::make_unique<HolderBacktracking>(params);
}
std::unique_ptr<StepRule> make_armijo(const HomeParams& params) {
  return std::make_unique<Armijo>(params);
}

// Drivers ------------------------------------------------------------------

RunTrace itsdeal_generic_run(const WeaklyConvexFn& f, const HomeParams& params, const Vec& x0,
                             const DirectionRule& direction, StepRule& rule,
                             const RunOptions& opts) {
  params.validate();
  if (x0.size() != f.dim) throw DimensionError("x0 has the wrong dimension for " + f.name);
  if (opts.x_true && opts.x_true->size() != f.dim)
    throw DimensionError("x_true has the wrong dimension for " + f.name);

  const double p = params.p, gamma = params.gamma, mu = params.resolved_mu();
  const OracleFn oracle = [&](const Vec& x, double eps) {
    return inexact_oracle(f, p, gamma, x, params.inner, mu, eps);
  };

  RunTrace trace;
  trace.header = {{"alg", rule.name()}, {"function", f.name}, {"direction", direction.name}};
  for (auto& kv : describe(params)) trace.header.push_back(std::move(kv));
  trace.header.push_back({"omega", fmt17(direction.vartheta - 1.0)});
  trace.header.push_back({"vartheta", fmt17(direction.vartheta)});
  trace.vartheta = direction.vartheta;

  const auto t0 = Clock::now();
  Vec x = x0;
  InexactOracle cur = oracle(x, params.eps(0));
  trace.oracle_calls = 1;

  for (long k = 0;; ++k) {
    TraceRow row;
    row.iter = k;
    row.value_eps = cur.value_eps;
    const double gn = cur.grad_eps.norm();
    row.grad_eps_norm = gn;
    row.eps = params.eps(k);
    row.objective = f.value(x);
    row.inner_iters = cur.cert.inner_iters;
    if (opts.x_true) row.relative_error = relative_error(x, *opts.x_true);
    const double elapsed = seconds_since(t0);
    row.wall_time_s = opts.record_clock ? elapsed : 0.0;

    if (gn == 0.0 || gn <= params.grad_tol) {
      trace.status = RunStatus::Converged;
      push_row(trace, row, opts, true);
      break;
    }
    if (budget_hit(opts.budget, k, elapsed)) {
      trace.status = RunStatus::BudgetExhausted;
      push_row(trace, row, opts, true);
      break;
    }

    const Vec d = direction.apply(cur.grad_eps);
    row.g_dot_d = cur.grad_eps.dot(d);
    row.direction_norm = d.norm();
    const double eps_next = params.eps(k + 1);
    const StepContext ctx{k, x, cur, d, gn, direction.vartheta, eps_next};
    StepOutcome out = rule.step(ctx, oracle);
    trace.oracle_calls += out.oracle_calls;
    row.step_alpha = out.alpha;
    row.Lbar = out.Lbar;
    row.backtracks = out.backtracks;
    row.decrease_coef = out.decrease_coef;
    if (!out.ok) {
      trace.status = RunStatus::Aborted;
      trace.message = out.failure;
      push_row(trace, row, opts, true);
      break;
    }

    const double varrho = opts.varrho_hat.value_or(out.decrease_coef);
    const double rhs = cur.value_eps - varrho * std::pow(gn, 1.0 + direction.vartheta) + eps_next;
    row.decrease_ok = out.oracle_next.value_eps <= rhs + 1e-12 * std::max(1.0, std::abs(rhs)) ? 1 : 0;
    push_row(trace, row, opts, false);

    x = std::move(out.x_next);
    cur = std::move(out.oracle_next);
  }

  trace.x_final = x;
  trace.elapsed_s = seconds_since(t0);
  return trace;
}

RunTrace higda_run(const WeaklyConvexFn& f, const HomeParams& params, const Vec& x0,
                   const SmoothnessBounds& bounds, const RunOptions& opts) {
  HomeParams P = params;
  P.omega = holder_omega(P.p);
  P.validate();
  const double alpha = higda_step_size(P, bounds.calL_p);
  auto rule = make_fixed_step(P, alpha, bounds.calL_p);
  RunTrace t = itsdeal_generic_run(f, P, x0, power_direction(P.omega), *rule, opts);
  t.header.push_back({"higda.calL", fmt17(bounds.calL_p)});
  t.header.push_back({"higda.alpha", fmt17(alpha)});
  return t;
}

RunTrace pf_higda_run(const WeaklyConvexFn& f, const HomeParams& params, const Vec& x0,
                      const RunOptions& opts) {
  HomeParams P = params;
  P.omega = holder_omega(P.p);
  P.validate();
  auto rule = make_holder_backtracking(P);
  return itsdeal_generic_run(f, P, x0, power_direction(P.omega), *rule, opts);
}

RunTrace ideals_run(const WeaklyConvexFn& f, const HomeParams& params, const Vec& x0,
                    const RunOptions& opts) {
  HomeParams P = params;
  if (std::isnan(P.omega)) P.omega = ideals_default_omega(P.p);
  P.validate();
  auto rule = make_armijo(P);
  return itsdeal_generic_run(f, P, x0, power_direction(P.omega), *rule, opts);
}

RunTrace subgradient_run(const WeaklyConvexFn& f, const SubgradientConfig& cfg, const Vec& x0,
                         const RunOptions& opts) {
  if (x0.size() != f.dim) throw DimensionError("x0 has the wrong dimension for " + f.name);
  if (!(cfg.alpha0 > 0.0)) throw ConfigError("sg.alpha must be positive");
  if (cfg.decaying && !(cfg.alpha0 <= 1.0)) throw ConfigError("sg.alpha0 must lie in (0, 1]");

  RunTrace trace;
  trace.header = {{"alg", cfg.decaying ? "sg-dss" : "sg-css"},
                  {"function", f.name},
                  {"sg.alpha", fmt17(cfg.alpha0)}};

  const auto t0 = Clock::now();
  Vec x = x0;
  Vec g(x.size());
  for (long k = 0;; ++k) {
    const double fx = f.eval(x, g);
    ++trace.oracle_calls;
    const double gn = g.norm();
    TraceRow row;
    row.iter = k;
    row.value_eps = fx;
    row.objective = fx;
    row.grad_eps_norm = gn;
    row.eps = 0.0;
    if (opts.x_true) row.relative_error = relative_error(x, *opts.x_true);
    const double elapsed = seconds_since(t0);
    row.wall_time_s = opts.record_clock ? elapsed : 0.0;
    if (gn == 0.0) {
      trace.status = RunStatus::Converged;
      push_row(trace, row, opts, true);
      break;
    }
    if (budget_hit(opts.budget, k, elapsed)) {
      trace.status = RunStatus::BudgetExhausted;
      push_row(trace, row, opts, true);
      break;
    }
    const double alpha =
        cfg.decaying ? std::pow(cfg.alpha0, static_cast<double>(std::max<long>(k, 1))) : cfg.alpha0;
    row.step_alpha = alpha;
    row.g_dot_d = -gn;
    row.direction_norm = 1.0;
    push_row(trace, row, opts, false);
    x -= (alpha / gn) * g;
  }
  trace.x_final = x;
  trace.elapsed_s = seconds_since(t0);
  return trace;
}

SmoothnessBounds safeguarded_bounds(const WeaklyConvexFn& f, const HomeParams& params,
                                    double sublevel_radius, double gamma_max, double ell0) {
  const double p = params.p, gamma = params.gamma, mu = params.resolved_mu();
  if (!(mu < 1.0)) throw AdmissibilityError("safeguarded mode needs mu < 1");
  const double phi0 = f.value(Vec::Zero(f.dim));
  const double R = sublevel_radius;
  const double tau_R = tau_lower_bounded(p, gamma, gamma_max, R, phi0, ell0);
  const double shift = (R + tau_R) / (1.0 - mu);
  const double r = R + shift * shift;
  const double tau_r = tau_lower_bounded(p, gamma, gamma_max, r, phi0, ell0);
  return smoothness_constants(p, gamma, f.rho, r, tau_r, gamma_max);
}

// Trace analysis -----------------------------------------------------------

RateReport residual_rate_report(const RunTrace& trace, const HomeParams& params,
                                double f_star_bound, std::optional<double> varrho_hat) {
  RateReport rep;
  rep.eps_bar = params.eps.total();
  const double p = params.p;
  rep.exact_gradient_factor = 1.0 + std::pow(2.0, 2.0 - p) * std::pow(params.resolved_mu(), p - 1.0);
  if (trace.rows.empty()) return rep;

  std::vector<const TraceRow*> steps;
  for (std::size_t i = 0; i + 1 < trace.rows.size(); ++i)
    if (trace.rows[i + 1].iter == trace.rows[i].iter + 1 && std::isfinite(trace.rows[i].step_alpha))
      steps.push_back(&trace.rows[i]);
  if (steps.empty()) return rep;

  if (varrho_hat) {
    rep.varrho_hat = *varrho_hat;
  } else {
    rep.varrho_hat = kInf;
    for (const auto* r : steps) rep.varrho_hat = std::min(rep.varrho_hat, r->decrease_coef);
  }
  const double F0 = trace.rows.front().value_eps;
  const double expo = 1.0 / (1.0 + trace.vartheta);
  double running = kInf;
  rep.holds = true;
  for (std::size_t N = 0; N < steps.size(); ++N) {
    running = std::min(running, steps[N]->grad_eps_norm);
    const double b =
        std::pow((F0 - f_star_bound + rep.eps_bar) / ((N + 1.0) * rep.varrho_hat), expo);
    rep.min_grad.push_back(running);
    rep.bound.push_back(b);
    rep.ratio.push_back(running / b);
    if (!(running <= b * (1.0 + 1e-12))) rep.holds = false;
  }
  return rep;
}

std::vector<std::string> audit_line_search(const RunTrace& trace, const HomeParams& params,
                                           Algorithm alg, double rel_tol) {
  std::vector<std::string> bad;
  if (alg == Algorithm::SGDSS || alg == Algorithm::SGCSS) return bad;
  const double p = params.p;
  const double C = params.descent_constant();
  const double vartheta = trace.vartheta;
  const double cap = step_cap(params);
  const int cap_count = alg == Algorithm::PFHiGDA ? params.max_trials - 1 : params.max_backtracks;

  for (std::size_t i = 0; i + 1 < trace.rows.size(); ++i) {
    const TraceRow& r = trace.rows[i];
    const TraceRow& n = trace.rows[i + 1];
    if (n.iter != r.iter + 1) continue;
    const std::string where = "iter " + std::to_string(r.iter) + ": ";

    if (!check_direction_pair(r.g_dot_d, r.grad_eps_norm, r.direction_norm, params.c1, params.c2,
                              vartheta))
      bad.push_back(where + "direction pair condition violated");
    if (r.backtracks < 0 || r.backtracks > cap_count)
      bad.push_back(where + "inner loop count " + std::to_string(r.backtracks) + " exceeds cap");

    double coef = kNaN;
    double gexp = 1.0 + vartheta;
    switch (alg) {
      case Algorithm::PFHiGDA:
        coef = holder_coef(params, r.step_alpha, r.Lbar);
        gexp = (p + 1.0) / (p - 1.0);
        if (r.step_alpha > cap * (1.0 + rel_tol)) bad.push_back(where + "step exceeds cap");
        break;
      case Algorithm::IDEALS:
        coef = r.step_alpha * params.armijo_lambda * C;
        if (r.step_alpha > 1.0 * (1.0 + rel_tol)) bad.push_back(where + "step exceeds 1");
        break;
      case Algorithm::HiGDA:
        coef = r.decrease_coef;
        if (r.step_alpha > cap * (1.0 + rel_tol)) bad.push_back(where + "step exceeds cap");
        break;
      default: break;
    }
    const double rhs = r.value_eps - coef * std::pow(r.grad_eps_norm, gexp) + n.eps;
    if (n.value_eps > rhs + rel_tol * std::max(1.0, std::abs(r.value_eps)))
      bad.push_back(where + "acceptance test fails: " + fmt17(n.value_eps) + " > " + fmt17(rhs));
  }
  return bad;
}

}  // namespace itsdeal
