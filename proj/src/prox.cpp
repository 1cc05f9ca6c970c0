#include "itsdeal/prox.hpp"

#include <cmath>

#include "itsdeal/envelope.hpp"

namespace itsdeal {

std::string to_string(InnerSolverKind kind) {
  switch (kind) {
    case InnerSolverKind::DecayingStep: return "decaying";
    case InnerSolverKind::ConstantStep: return "constant";
    case InnerSolverKind::Exact: return "exact";
  }
  return "?";
}

InnerSolverKind inner_solver_kind_from_string(const std::string& s) {
  if (s == "decaying") return InnerSolverKind::DecayingStep;
  if (s == "constant") return InnerSolverKind::ConstantStep;
  if (s == "exact") return InnerSolverKind::Exact;
  throw ConfigError("unknown inner solver kind '" + s + "' (decaying|constant|exact)");
}

void InnerSolverConfig::validate() const {
  if (max_iters < 1) throw ConfigError("inner.max_iters must be >= 1");
  if (kind == InnerSolverKind::DecayingStep && !(alpha0 > 0.0 && alpha0 <= 1.0))
    throw ConfigError("inner.alpha0 must lie in (0, 1] for decaying steps");
  if (kind == InnerSolverKind::ConstantStep && !(alpha0 > 0.0))
    throw ConfigError("inner.alpha0 must be positive");
  if (!(move_tol >= 0.0)) throw ConfigError("inner.move_tol must be nonnegative");
}

double prox_objective(const WeaklyConvexFn& f, double p, double gamma, const Vec& x, const Vec& y) {
  return f.value(y) + std::pow((x - y).norm(), p) / (p * gamma);
}

Vec envelope_gradient(double p, double gamma, const Vec& x, const Vec& y) {
  return power_map(x - y, p) / gamma;
}

double default_mu(double p) { return 0.9 * std::pow(std::pow(2.0, p - 2.0), 1.0 / (p - 1.0)); }

ProxCertificate sg_inner_solve(const WeaklyConvexFn& f, double p, double gamma, const Vec& x,
                               const InnerSolverConfig& cfg) {
  if (!(gamma > 0.0)) throw DomainError("sg_inner_solve: gamma must be positive");
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("sg_inner_solve: p must lie in (1, 2]");
  cfg.validate();

  const double inv = 1.0 / (p * gamma);
  Vec y = x;
  Vec g(x.size());
  double fy = f.eval(y, g);  // f and one subgradient at y
  Vec best = y;
  double best_val = fy;      // regularizer vanishes at y = x
  double last_move = 0.0;
  int iters = 0;

  for (int k = 0; k < cfg.max_iters; ++k) {
    const Vec zeta = g + power_map(y - x, p) / gamma;
    const double zn = zeta.norm();
    if (zn == 0.0) break;  // stationary point of Phi_x
    const double alpha = cfg.kind == InnerSolverKind::DecayingStep
                             ? std::pow(cfg.alpha0, std::max(k, 1))
                             : cfg.alpha0;
    y.noalias() -= (alpha / zn) * zeta;
    ++iters;
    last_move = alpha;
    fy = f.eval(y, g);
    const double val = fy + inv * std::pow((x - y).norm(), p);
    if (val < best_val) {
      best_val = val;
      best = y;
    }
    if (alpha < cfg.move_tol) break;
  }

  ProxCertificate cert;
  cert.y_eps = std::move(best);
  cert.inner_iters = iters;
  cert.delta_k = last_move;
  return cert;
}

Vec exact_prox(const WeaklyConvexFn& f, double p, double gamma, const Vec& x) {
  if (f.exact_prox) return f.exact_prox(p, gamma, x);
  if (x.size() > 2)
    throw DimensionError("exact_prox: no closed form for '" + f.name + "' and dimension > 2");
  GridSpec grid;
  grid.radius = prox_search_radius(f, p, gamma, x.norm() * 1.0001 + 1e-9);
  if (x.size() == 2) grid.points = 801;
  return exact_envelope_oracle(f, p, gamma, x, grid).argmin;
}

ProxCertificate certify(const WeaklyConvexFn& f, double p, double gamma, const Vec& x,
                        const Vec& y_eps, double mu, double eps_k,
                        const std::optional<Vec>& exact, double proxy_delta) {
  ProxCertificate cert;
  cert.y_eps = y_eps;
  cert.mu = mu;
  cert.eps_k = eps_k;
  const double dist = (x - y_eps).norm();
  if (exact) {
    cert.delta_k = (y_eps - *exact).norm();
    cert.true_gap = prox_objective(f, p, gamma, x, y_eps) - prox_objective(f, p, gamma, x, *exact);
    cert.relative_bound_ok = cert.delta_k <= mu * dist;
    cert.certified = cert.relative_bound_ok;
  } else {
    cert.delta_k = proxy_delta;
    cert.relative_bound_ok = proxy_delta <= mu * dist;
    cert.certified = false;
  }
  return cert;
}

InexactOracle assemble_oracle(const WeaklyConvexFn& f, double p, double gamma, const Vec& x,
                              ProxCertificate cert) {
  InexactOracle o;
  o.value_eps = prox_objective(f, p, gamma, x, cert.y_eps);
  o.grad_eps = envelope_gradient(p, gamma, x, cert.y_eps);
  o.cert = std::move(cert);
  return o;
}

InexactOracle inexact_oracle(const WeaklyConvexFn& f, double p, double gamma, const Vec& x,
                             const InnerSolverConfig& cfg, double mu, double eps_k) {
  if (x.size() != f.dim) throw DimensionError("inexact_oracle: dimension mismatch");
  if (cfg.kind == InnerSolverKind::Exact) {
    const Vec y = exact_prox(f, p, gamma, x);
    ProxCertificate cert = certify(f, p, gamma, x, y, mu, eps_k, y);
    return assemble_oracle(f, p, gamma, x, std::move(cert));
  }
  ProxCertificate raw = sg_inner_solve(f, p, gamma, x, cfg);
  ProxCertificate cert = certify(f, p, gamma, x, raw.y_eps, mu, eps_k, std::nullopt, raw.delta_k);
  cert.inner_iters = raw.inner_iters;
  return assemble_oracle(f, p, gamma, x, std::move(cert));
}

}  // namespace itsdeal
