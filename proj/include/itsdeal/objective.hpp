#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "itsdeal/common.hpp"

namespace itsdeal {

/// A rho-weakly convex function together with a subgradient oracle.
///
/// `value` and `subgradient` are mandatory. `value_and_subgradient` is an
/// optional fused path (the robust sparse-recovery objective shares the
/// residual between the two); `exact_prox` is an optional closed-form or
/// otherwise machine-precision solver for argmin_y f(y) + ‖x-y‖^p/(p gamma).
struct WeaklyConvexFn {
  std::string name;
  int dim = 1;
  double rho = 0.0;
  std::optional<double> lower_bound;

  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> subgradient;
  std::function<double(const Vec&, Vec&)> value_and_subgradient;
  std::function<Vec(double p, double gamma, const Vec& x)> exact_prox;

  /// Value at x, writing one subgradient into g.
  double eval(const Vec& x, Vec& g) const {
    if (value_and_subgradient) return value_and_subgradient(x, g);
    g = subgradient(x);
    return value(x);
  }
};

// Built-in test functions.
WeaklyConvexFn zero_function(int dim);
/// f(y) = ½‖y‖²; convex, exact prox for every p in (1,2].
WeaklyConvexFn half_squared_norm(int dim);
/// f(y) = y⁴ - y² on the real line; 2-weakly convex, bounded below by -1/4.
WeaklyConvexFn quartic_well();
/// f(y) = ‖y‖₁.
WeaklyConvexFn l1_norm(int dim);
/// f(y) = Σ clipped_quadratic(y_i, sigma).
WeaklyConvexFn clipped_quadratic_sum(int dim, double sigma);

// Clipped quadratic penalty.
double clipped_quadratic(double t, double sigma);
double clipped_quadratic_subgrad(double t, double sigma);
/// Weak-convexity modulus of the clipped quadratic: the quadratic branch has
/// curvature -2 sigma², so the smallest valid modulus is 2 sigma².
double clipped_quadratic_modulus(double sigma);

struct InstanceParams {
  int n = 1000;
  int m = 500;
  int k1 = 50;
  int k2 = 30;
  double sigma = 1.0;
  double lambda_bar = 0.5;
  std::uint64_t seed = 0;
};

/// y = A x_true + e with A_ij ~ N(0, 1/m), x_true k1-sparse with N(0,1)
/// nonzeros, e k2-sparse with N(2,1) nonzeros.
struct SparseRecoveryInstance {
  InstanceParams params;
  Mat A;
  Vec y;
  Vec x_true;
  Vec e;
};

SparseRecoveryInstance generate_instance(const InstanceParams& params);

double rsr_value(const SparseRecoveryInstance& inst, const Vec& x);
Vec rsr_subgrad(const SparseRecoveryInstance& inst, const Vec& x);
/// ‖Ax - y‖₁ + lambda_bar Σ f(x_i) as a WeaklyConvexFn (shares the instance).
WeaklyConvexFn robust_sparse_recovery(std::shared_ptr<const SparseRecoveryInstance> inst);

/// ‖x - x_true‖₂ / ‖x_true‖₂, the recovery metric used everywhere.
double relative_error(const Vec& x, const Vec& x_true);

// Text container: `#`-prefixed key=value header followed by named blocks.
void write_instance(std::ostream& os, const SparseRecoveryInstance& inst);
SparseRecoveryInstance read_instance(std::istream& is);

}  // namespace itsdeal
