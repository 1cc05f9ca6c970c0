#pragma once

#include <vector>

#include "itsdeal/common.hpp"
#include "itsdeal/objective.hpp"

namespace itsdeal {

/// Residual of t(t-1)/2 = 1 - [1 + (2-√3)t/(t-1)]^{1-t}, written as lhs - rhs.
double t_hat_residual(double t);

/// Root of t_hat_residual on (1, 2), bisected to 1e-12 once and cached.
double solve_t_hat();

/// Piecewise modulus of the basic inequality
///   <‖a‖^{t-2}a - ‖b‖^{t-2}b, a-b> >= kappa(t) r^{t-2} ‖a-b‖²  on the ball of radius r.
///
/// The three branches are evaluated verbatim; they do not join continuously
/// at t_hat or at t = 2.
double kappa(double t);

/// Prox radius when f is bounded below by ell0:
///   2r + (2^{p-1} p gamma_max (f(0) - ell0))^{1/p}.
double tau_lower_bounded(double p, double gamma, double gamma_max, double r, double phi0,
                         double ell0);

/// Prox radius under high-order prox-boundedness with threshold estimate gamma_hat.
/// Throws AdmissibilityError when gamma is at or beyond 4^{1-p} gamma_hat.
double tau_prox_bounded(double p, double gamma, double gamma_hat, double r, double phi0,
                        double ell0_shifted);

struct SmoothnessBounds {
  double r = 0;
  double tau = 0;
  double L_p = 0;     // 1/2-Hölder constant of the prox map on the ball
  double calL_p = 0;  // (p-1)/2-Hölder constant of the envelope gradient
  double gamma_max = kInf;
  double sigma = 0;   // admissibility bound min{gamma_max, (kappa_p/rho)(r+tau)^{p-2}}
};

/// Hölder constants of the envelope on the ball of radius r, given the prox
/// radius tau_bar. Throws AdmissibilityError if gamma >= sigma.
SmoothnessBounds smoothness_constants(double p, double gamma, double rho, double r,
                                      double tau_bar, double gamma_max = kInf);

struct GridSpec {
  double radius = 1.0;     // grid spans [-radius, radius]^dim
  int points = 4001;       // per axis
  int refinements = 60;    // ternary-search rounds in each winning cell
  double tie_tol = 1e-9;   // relative tolerance for reporting ties
};

struct EnvelopeEvaluation {
  double value = 0;
  Vec argmin;
  std::vector<Vec> minimizers;  // every refined global minimizer, ties included
};

/// Brute-force envelope value and prox for dim <= 2, for verification only.
EnvelopeEvaluation exact_envelope_oracle(const WeaklyConvexFn& f, double p, double gamma,
                                         const Vec& x, const GridSpec& grid);

/// Grid radius covering the prox of every point with ‖x‖ <= r, from
/// tau_lower_bounded when a lower bound is known. Falls back to `fallback`.
double prox_search_radius(const WeaklyConvexFn& f, double p, double gamma, double r,
                          double fallback = 4.0);

}  // namespace itsdeal
