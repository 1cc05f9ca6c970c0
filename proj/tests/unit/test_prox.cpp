#include <cmath>
#include <random>

#include <doctest.h>

#include "itsdeal/envelope.hpp"
#include "itsdeal/prox.hpp"

using namespace itsdeal;
using doctest::Approx;

TEST_CASE("default mu") {
  CHECK(default_mu(2.0) == Approx(0.9));
  for (double p : {1.1, 1.25, 1.5, 1.75}) {
    const double mu = default_mu(p);
    CHECK(std::pow(2.0, 2.0 - p) * std::pow(mu, p - 1.0) == Approx(std::pow(0.9, p - 1.0)));
  }
}

TEST_CASE("inner solver on the zero function returns x") {
  Vec x(2);
  x << 0.3, -1.2;
  const ProxCertificate c = sg_inner_solve(zero_function(2), 1.5, 0.8, x, InnerSolverConfig{});
  CHECK(c.y_eps == x);
  CHECK(c.inner_iters == 0);
}

TEST_CASE("first inner step on |y|") {
  InnerSolverConfig cfg;
  cfg.max_iters = 1;
  const ProxCertificate c = sg_inner_solve(l1_norm(1), 2.0, 1.0, Vec::Constant(1, 1.0), cfg);
  CHECK(c.inner_iters == 1);
  CHECK(c.delta_k == Approx(0.95));
  CHECK(c.y_eps[0] == Approx(0.05));
}

TEST_CASE("inner solver at the stationary point of the quartic well") {
  InnerSolverConfig cfg;
  const ProxCertificate c = sg_inner_solve(quartic_well(), 1.5, 0.6, Vec::Zero(1), cfg);
  CHECK(std::abs(c.y_eps[0]) <= 5e-2);
}

TEST_CASE("inner solver validation") {
  InnerSolverConfig cfg;
  cfg.max_iters = 0;
  CHECK_THROWS_AS(sg_inner_solve(l1_norm(1), 2.0, 1.0, Vec::Zero(1), cfg), ConfigError);
  CHECK_THROWS_AS(sg_inner_solve(l1_norm(1), 2.5, 1.0, Vec::Zero(1), InnerSolverConfig{}),
                  DomainError);
  CHECK(inner_solver_kind_from_string("exact") == InnerSolverKind::Exact);
  CHECK_THROWS_AS(inner_solver_kind_from_string("newton"), ConfigError);
}

TEST_CASE("certificate against the exact prox") {
  const WeaklyConvexFn f = half_squared_norm(1);
  const Vec x = Vec::Constant(1, 1.0);
  const Vec y = exact_prox(f, 2.0, 1.0, x);
  CHECK(y[0] == Approx(0.5));

  const ProxCertificate exact = certify(f, 2.0, 1.0, x, y, 0.9, 0.0, y);
  CHECK(exact.delta_k == 0.0);
  CHECK(*exact.true_gap == 0.0);
  CHECK(exact.certified);

  const ProxCertificate c = certify(f, 2.0, 1.0, x, Vec::Constant(1, 0.6), 0.9, 0.0, y);
  CHECK(c.delta_k == Approx(0.1));
  CHECK(*c.true_gap == Approx(0.01));
  CHECK(c.certified);

  const ProxCertificate far = certify(f, 2.0, 1.0, x, Vec::Constant(1, 0.95), 0.9, 0.0, y);
  CHECK_FALSE(far.certified);

  const ProxCertificate proxy =
      certify(f, 2.0, 1.0, x, Vec::Constant(1, 0.6), 0.9, 0.0, std::nullopt, 0.01);
  CHECK_FALSE(proxy.certified);
  CHECK(proxy.relative_bound_ok);
}

TEST_CASE("inexact oracle values") {
  InnerSolverConfig exact;
  exact.kind = InnerSolverKind::Exact;
  const InexactOracle z = inexact_oracle(zero_function(1), 1.5, 0.5, Vec::Constant(1, 2.0), exact,
                                         default_mu(1.5), 0.0);
  CHECK(z.value_eps == 0.0);
  CHECK(z.grad_eps.norm() == 0.0);

  const InexactOracle q = inexact_oracle(half_squared_norm(1), 2.0, 1.0, Vec::Constant(1, 1.0),
                                         exact, 0.9, 0.0);
  CHECK(q.grad_eps[0] == Approx(0.5));
  CHECK(q.value_eps == Approx(0.25));

  CHECK_THROWS_AS(inexact_oracle(half_squared_norm(2), 2.0, 1.0, Vec::Zero(3), exact, 0.9, 0.0),
                  DimensionError);
}

TEST_CASE("inexact value sits above the envelope") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const WeaklyConvexFn f = quartic_well();
  GridSpec grid;
  grid.radius = 4.0;
  for (int i = 0; i < 50; ++i) {
    const Vec x = Vec::Constant(1, u(rng));
    const InexactOracle o = inexact_oracle(f, 1.5, 0.2, x, InnerSolverConfig{}, default_mu(1.5), 0.0);
    CHECK(o.value_eps >= exact_envelope_oracle(f, 1.5, 0.2, x, grid).value - 1e-12);
  }
}

TEST_CASE("tight inner solve recovers the closed-form gradient") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  InnerSolverConfig tight;
  tight.max_iters = 5000;
  tight.move_tol = 1e-13;
  for (int dim = 1; dim <= 5; ++dim) {
    const WeaklyConvexFn f = half_squared_norm(dim);
    for (double p : {1.5, 2.0}) {
      Vec x(dim);
      for (int j = 0; j < dim; ++j) x[j] = u(rng);
      const InexactOracle o = inexact_oracle(f, p, 0.9, x, tight, default_mu(p), 0.0);
      const Vec g = envelope_gradient(p, 0.9, x, f.exact_prox(p, 0.9, x));
      CHECK((o.grad_eps - g).norm() <= 1e-6);
    }
  }
}

TEST_CASE("gradient error bounds along a perturbation sweep") {
  const WeaklyConvexFn f = half_squared_norm(1);
  const Vec x = Vec::Constant(1, 1.3);
  for (double p : {1.25, 1.5, 2.0}) {
    const double gamma = 0.7;
    const Vec y = exact_prox(f, p, gamma, x);
    const Vec g = envelope_gradient(p, gamma, x, y);
    for (double delta : {1e-6, 1e-3, 0.1, 0.4}) {
      const Vec ye = y + Vec::Constant(1, delta);
      const double err = (envelope_gradient(p, gamma, x, ye) - g).norm();
      CHECK(err <= std::pow(2.0, 2.0 - p) / gamma * std::pow(delta, p - 1.0) * (1 + 1e-9));
    }
  }
}
