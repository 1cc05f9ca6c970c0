#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itsdeal/common.hpp"
#include "itsdeal/envelope.hpp"
#include "itsdeal/objective.hpp"
#include "itsdeal/prox.hpp"

namespace itsdeal {

enum class Scenario { S1, S2, S3 };
std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& s);

enum class Algorithm { HiGDA, PFHiGDA, IDEALS, SGDSS, SGCSS };
std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

/// eps_k = scale / (k+1)^2.
struct EpsSchedule {
  double scale = 1.0;
  double operator()(long k) const { return scale / (static_cast<double>(k + 1) * (k + 1)); }
  /// Sum over all k >= 0.
  double total() const;
};

struct HomeParams {
  double p = 1.25;
  double gamma = 0.9;
  double c1 = 1.0;
  double c2 = 1.0;
  double mu = kNaN;     // NaN selects default_mu(p)
  double omega = kNaN;  // NaN selects the algorithm's default exponent
  EpsSchedule eps;
  double armijo_lambda = 0.5;
  double armijo_upsilon = 0.4;
  int max_backtracks = 50;
  Scenario scenario = Scenario::S3;
  double lbar_growth = 3.0;
  double L0 = 1e-3;
  int max_trials = 60;
  InnerSolverConfig inner;
  double grad_tol = 1e-8;

  double resolved_mu() const;
  /// c1 - 2^{2-p} mu^{p-1} c2; positive exactly when mu satisfies the descent hypothesis.
  double descent_constant() const;
  /// Throws AdmissibilityError / ConfigError on violated hypotheses.
  void validate() const;
};

/// Exponent used by HiGDA and parameter-free HiGDA: (3-p)/(p-1).
double holder_omega(double p);
/// Default IDEALS exponent (2-p)/(p-1).
double ideals_default_omega(double p);

struct Budget {
  std::optional<long> max_iters;
  std::optional<double> time_s;
};

struct RunOptions {
  Budget budget;
  std::optional<Vec> x_true;
  bool record_clock = true;
  int row_stride = 1;                  // keep every row_stride-th row (and the last)
  std::optional<double> varrho_hat;    // sufficient-decrease constant for decrease_ok
};

struct TraceRow {
  long iter = 0;
  double wall_time_s = 0;
  double value_eps = 0;
  double grad_eps_norm = 0;
  double eps = 0;
  double objective = 0;
  double step_alpha = kNaN;
  double Lbar = kNaN;
  int inner_iters = 0;
  int backtracks = 0;
  double relative_error = kNaN;
  double g_dot_d = kNaN;
  double direction_norm = kNaN;
  double decrease_coef = kNaN;
  int decrease_ok = -1;  // 1 holds, 0 violated, -1 not checked
};

enum class RunStatus { Converged, BudgetExhausted, Aborted };
std::string to_string(RunStatus s);

struct RunTrace {
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<TraceRow> rows;
  Vec x_final;
  RunStatus status = RunStatus::BudgetExhausted;
  std::string message;
  double vartheta = kNaN;
  long oracle_calls = 0;
  double elapsed_s = 0;  // measured even when the clock column is disabled

  std::string header_value(const std::string& key) const;
};

// Directions ---------------------------------------------------------------

/// -‖g‖^omega g, zero when g = 0.
Vec direction_power(const Vec& g, double omega);

/// <g,d> <= -c1 ‖g‖^{1+vartheta} and ‖d‖ <= c2 ‖g‖^vartheta, with 1e-12 slack.
bool check_direction_pair(const Vec& g, const Vec& d, double c1, double c2, double vartheta);
bool check_direction_pair(double g_dot_d, double g_norm, double d_norm, double c1, double c2,
                          double vartheta);

struct DirectionRule {
  std::string name;
  double vartheta = 1.0;
  std::function<Vec(const Vec&)> apply;
};
/// Power direction with vartheta = omega + 1, so the pair test holds with c1 = c2 = 1.
DirectionRule power_direction(double omega);

// Step rules ---------------------------------------------------------------

using OracleFn = std::function<InexactOracle(const Vec& x, double eps)>;

struct StepContext {
  long k = 0;
  const Vec& x;
  const InexactOracle& oracle;  // at x, produced with eps_k
  const Vec& d;
  double g_norm = 0;
  double vartheta = 1.0;  // of the direction rule
  double eps_next = 0;
};

struct StepOutcome {
  bool ok = true;
  double alpha = kNaN;
  double Lbar = kNaN;
  int backtracks = 0;
  int oracle_calls = 0;
  double decrease_coef = kNaN;  // coefficient of ‖g‖^{1+vartheta} the rule guarantees
  Vec x_next;
  InexactOracle oracle_next;
  std::string failure;
};

class StepRule {
 public:
  virtual ~StepRule() = default;
  virtual std::string name() const = 0;
  virtual StepOutcome step(const StepContext& ctx, const OracleFn& oracle) = 0;
};

/// Fixed step of HiGDA: alpha = min{gamma^{2/(p-1)}/c2, ((p+1)C/(2 c2^{(p+1)/2} calL))^{2/(p-1)}}.
double higda_step_size(const HomeParams& params, double calL_p);

std::unique_ptr<StepRule> make_fixed_step(const HomeParams& params, double alpha, double calL_p);
std::unique_ptr<StepRule> make_holder_backtracking(const HomeParams& params);
std::unique_ptr<StepRule> make_armijo(const HomeParams& params);

// Drivers ------------------------------------------------------------------

/// Resolved parameters as trace header entries (keys match the config schema).
std::vector<std::pair<std::string, std::string>> describe(const HomeParams& params);

/// Generic two-level descent loop: oracle, direction, step rule, trace row.
RunTrace itsdeal_generic_run(const WeaklyConvexFn& f, const HomeParams& params, const Vec& x0,
                             const DirectionRule& direction, StepRule& rule,
                             const RunOptions& opts);

RunTrace higda_run(const WeaklyConvexFn& f, const HomeParams& params, const Vec& x0,
                   const SmoothnessBounds& bounds, const RunOptions& opts);
RunTrace pf_higda_run(const WeaklyConvexFn& f, const HomeParams& params, const Vec& x0,
                      const RunOptions& opts);
RunTrace ideals_run(const WeaklyConvexFn& f, const HomeParams& params, const Vec& x0,
                    const RunOptions& opts);

struct SubgradientConfig {
  bool decaying = true;  // SG-DSS when true, SG-CSS otherwise
  double alpha0 = 0.95;
};
/// Subgradient baseline applied directly to f (no envelope).
RunTrace subgradient_run(const WeaklyConvexFn& f, const SubgradientConfig& cfg, const Vec& x0,
                         const RunOptions& opts);

/// Safeguarded-mode constants: r and tau from the sublevel radius, then the
/// Hölder constants. Throws AdmissibilityError when gamma is not admissible.
SmoothnessBounds safeguarded_bounds(const WeaklyConvexFn& f, const HomeParams& params,
                                    double sublevel_radius, double gamma_max, double ell0);

// Trace analysis -----------------------------------------------------------

struct RateReport {
  std::vector<double> min_grad;  // min_{k<=N} ‖g_k‖
  std::vector<double> bound;     // ((F_0 - F* + eps_bar)/((N+1) varrho_hat))^{1/(1+vartheta)}
  std::vector<double> ratio;
  double varrho_hat = kNaN;
  double eps_bar = kNaN;
  double exact_gradient_factor = kNaN;  // 1 + 2^{2-p} mu^{p-1}
  bool holds = false;
};

/// Compares the realized min-gradient sequence with the sublinear envelope,
/// using varrho_hat = min decrease_coef over the trace unless given.
RateReport residual_rate_report(const RunTrace& trace, const HomeParams& params,
                                double f_star_bound,
                                std::optional<double> varrho_hat = std::nullopt);

/// Re-evaluates every accepted step's acceptance test from recorded columns.
/// Returns one message per violated row (empty when the trace is consistent).
std::vector<std::string> audit_line_search(const RunTrace& trace, const HomeParams& params,
                                           Algorithm alg, double rel_tol = 1e-9);

}  // namespace itsdeal
