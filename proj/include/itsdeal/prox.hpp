#pragma once

#include <optional>
#include <string>

#include "itsdeal/common.hpp"
#include "itsdeal/objective.hpp"

namespace itsdeal {

enum class InnerSolverKind {
  DecayingStep,  // alpha_k = alpha0^k (alpha0 on the first step)
  ConstantStep,  // alpha_k = alpha0
  Exact,         // f.exact_prox, or the grid oracle for dim <= 2
};

std::string to_string(InnerSolverKind kind);
InnerSolverKind inner_solver_kind_from_string(const std::string& s);

struct InnerSolverConfig {
  InnerSolverKind kind = InnerSolverKind::DecayingStep;
  double alpha0 = 0.95;
  int max_iters = 200;
  double move_tol = 1e-3;

  void validate() const;
};

/// An approximate prox point with its (eps, delta, mu) bookkeeping.
///
/// Without an exact prox, delta_k holds the last inner step length as a
/// proxy and `certified` stays false; `relative_bound_ok` records whether
/// delta_k <= mu ‖x - y_eps‖ held for that proxy.
struct ProxCertificate {
  Vec y_eps;
  double eps_k = 0;
  double delta_k = 0;
  double mu = 0;
  int inner_iters = 0;
  bool certified = false;
  bool relative_bound_ok = false;
  std::optional<double> true_gap;  // Phi(y_eps) - Phi(prox(x)), when known
};

struct InexactOracle {
  double value_eps = 0;
  Vec grad_eps;
  ProxCertificate cert;
};

/// Phi_x(y) = f(y) + ‖x - y‖^p / (p gamma).
double prox_objective(const WeaklyConvexFn& f, double p, double gamma, const Vec& x, const Vec& y);

/// (1/gamma) ‖x - y‖^{p-2} (x - y), the envelope gradient at x when y is its prox.
Vec envelope_gradient(double p, double gamma, const Vec& x, const Vec& y);

/// 0.9 (1/2^{2-p})^{1/(p-1)}.
double default_mu(double p);

/// Normalized subgradient descent on Phi_x from y0 = x; returns the best iterate.
ProxCertificate sg_inner_solve(const WeaklyConvexFn& f, double p, double gamma, const Vec& x,
                               const InnerSolverConfig& cfg);

/// Prox at machine precision: f.exact_prox if provided, otherwise the grid oracle (dim <= 2).
Vec exact_prox(const WeaklyConvexFn& f, double p, double gamma, const Vec& x);

/// Fills in delta, the objective gap and the certified flag for y_eps.
/// With `exact` available the true distance is used; otherwise `proxy_delta`.
ProxCertificate certify(const WeaklyConvexFn& f, double p, double gamma, const Vec& x,
                        const Vec& y_eps, double mu, double eps_k,
                        const std::optional<Vec>& exact, double proxy_delta = kNaN);

/// Inexact value and gradient assembled from a certificate.
InexactOracle assemble_oracle(const WeaklyConvexFn& f, double p, double gamma, const Vec& x,
                              ProxCertificate cert);

/// Inner solve followed by assemble_oracle.
InexactOracle inexact_oracle(const WeaklyConvexFn& f, double p, double gamma, const Vec& x,
                             const InnerSolverConfig& cfg, double mu, double eps_k);

}  // namespace itsdeal
