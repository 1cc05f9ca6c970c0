#include <cmath>

#include <doctest.h>

#include "itsdeal/itsdeal.hpp"

using namespace itsdeal;
using doctest::Approx;

namespace {

HomeParams exact_params(double p) {
  HomeParams P;
  P.p = p;
  P.inner.kind = InnerSolverKind::Exact;
  return P;
}

RunOptions iters(long n) {
  RunOptions o;
  o.budget.max_iters = n;
  o.record_clock = false;
  return o;
}

}  // namespace

TEST_CASE("power direction") {
  Vec g(2);
  g << 3.0, 4.0;
  CHECK((direction_power(g, 0.0) + g).norm() == 0.0);
  CHECK((direction_power(g, 1.0) + 5.0 * g).norm() == Approx(0.0));
  CHECK(direction_power(Vec::Zero(2), 2.0).norm() == 0.0);
  CHECK(check_direction_pair(g, direction_power(g, 2.0), 1.0, 1.0, 3.0));
  CHECK_FALSE(check_direction_pair(g, g, 1.0, 1.0, 1.0));
  CHECK_FALSE(check_direction_pair(g, -2.0 * g, 1.0, 1.0, 1.0));
  const DirectionRule r = power_direction(2.0);
  CHECK(r.vartheta == 3.0);
}

TEST_CASE("default exponents and parameter defaults") {
  CHECK(holder_omega(2.0) == Approx(1.0));
  CHECK(holder_omega(1.5) == Approx(3.0));
  CHECK(ideals_default_omega(1.25) == Approx(3.0));
  CHECK(ideals_default_omega(2.0) == 0.0);
  const HomeParams P;
  CHECK(P.lbar_growth == 3.0);
  CHECK(P.L0 == 1e-3);
  CHECK(P.armijo_lambda == 0.5);
  CHECK(P.armijo_upsilon == 0.4);
  CHECK(P.descent_constant() == Approx(1.0 - std::pow(0.9, 0.25)));
}

TEST_CASE("eps schedule is summable") {
  EpsSchedule e;
  CHECK(e(0) == 1.0);
  CHECK(e(1) == 0.25);
  double s = 0;
  for (long k = 0; k < 100000; ++k) s += e(k);
  CHECK(s <= e.total());
  CHECK(e.total() == Approx(M_PI * M_PI / 6));
}

TEST_CASE("HiGDA fixed step") {
  HomeParams P;
  P.p = 2.0;
  P.gamma = 1.0;
  P.mu = 0.45;
  CHECK(higda_step_size(P, 3.0) == Approx(0.075625));
  P.mu = 1e-12;
  CHECK(higda_step_size(P, 3.0) == Approx(0.25));
  P.mu = 0.45;
  double prev = kInf;
  for (double L : {1.0, 3.0, 10.0, 100.0}) {
    const double a = higda_step_size(P, L);
    CHECK(a <= prev);
    prev = a;
  }
  P.mu = 1.2;
  CHECK_THROWS_AS(P.validate(), AdmissibilityError);
}

TEST_CASE("zero function terminates at once") {
  const Vec x0 = Vec::Constant(2, 1.0);
  for (int a = 0; a < 2; ++a) {
    const RunTrace t = a ? ideals_run(zero_function(2), exact_params(1.5), x0, iters(10))
                         : pf_higda_run(zero_function(2), exact_params(1.5), x0, iters(10));
    CHECK(t.rows.size() == 1);
    CHECK(t.status == RunStatus::Converged);
  }
}

TEST_CASE("IDEALS accepts the unit step on a quadratic") {
  HomeParams P = exact_params(2.0);
  P.gamma = 1.0;
  P.omega = 0.0;
  const RunTrace t = ideals_run(half_squared_norm(1), P, Vec::Constant(1, 4.0), iters(3));
  REQUIRE(t.rows.size() >= 2);
  CHECK(t.rows[0].grad_eps_norm == Approx(2.0));
  CHECK(t.rows[0].step_alpha == 1.0);
  CHECK(t.rows[0].backtracks == 0);
  CHECK(t.rows[1].value_eps == Approx(1.0));
  CHECK(audit_line_search(t, P, Algorithm::IDEALS).empty());
  for (const auto& r : t.rows)
    if (r.decrease_ok != -1) CHECK(r.decrease_ok == 1);
}

TEST_CASE("PF-HiGDA with identical gradients takes the cap") {
  // Away from the kink the envelope of |y| at p = 2 has gradient sign(x); the grid oracle
  // reproduces it to rounding, so the secant estimate is zero up to that noise.
  HomeParams P = exact_params(2.0);
  P.gamma = 0.5;
  P.scenario = Scenario::S3;
  const RunTrace t = pf_higda_run(l1_norm(1), P, Vec::Constant(1, 10.0), iters(3));
  REQUIRE(t.rows.size() >= 3);
  const double cap = P.gamma * P.gamma / P.c2;
  CHECK(t.rows[0].step_alpha == Approx(cap));
  CHECK(t.rows[0].grad_eps_norm == Approx(1.0));
  CHECK(t.rows[1].Lbar <= 1e-10);
  CHECK(t.rows[1].step_alpha == Approx(cap));
  CHECK(t.rows[1].value_eps < t.rows[0].value_eps);
  CHECK(audit_line_search(t, P, Algorithm::PFHiGDA).empty());
}

TEST_CASE("PF-HiGDA with a large initial constant never backtracks") {
  HomeParams P = exact_params(1.5);
  P.scenario = Scenario::S1;
  P.L0 = 1e6;
  const RunTrace t = pf_higda_run(half_squared_norm(2), P, Vec::Constant(2, 1.5), iters(20));
  for (const auto& r : t.rows) CHECK(r.backtracks == 0);
}

TEST_CASE("every scenario passes the audit on the quartic well") {
  for (Scenario s : {Scenario::S1, Scenario::S2, Scenario::S3}) {
    HomeParams P;
    P.p = 1.5;
    P.gamma = 0.2;
    P.scenario = s;
    const RunTrace t = pf_higda_run(quartic_well(), P, Vec::Constant(1, 2.0), iters(40));
    CHECK(t.status != RunStatus::Aborted);
    CHECK(audit_line_search(t, P, Algorithm::PFHiGDA).empty());
  }
}

TEST_CASE("HiGDA agrees with the generic driver") {
  HomeParams P = exact_params(2.0);
  P.gamma = 0.5;
  const SmoothnessBounds b = smoothness_constants(2.0, 0.5, 0.0, 3.0, 4.0);
  const Vec x0 = Vec::Constant(1, 2.0);
  const RunTrace a = higda_run(half_squared_norm(1), P, x0, b, iters(30));
  auto rule = make_fixed_step(P, higda_step_size(P, b.calL_p), b.calL_p);
  const RunTrace c = itsdeal_generic_run(half_squared_norm(1), P, x0,
                                         power_direction(holder_omega(2.0)), *rule, iters(30));
  REQUIRE(a.rows.size() == c.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].value_eps == c.rows[i].value_eps);
  CHECK(a.rows.back().value_eps < a.rows.front().value_eps);
  for (const auto& r : a.rows)
    if (r.decrease_ok != -1) CHECK(r.decrease_ok == 1);
  CHECK(audit_line_search(a, P, Algorithm::HiGDA).empty());
}

TEST_CASE("rate report on a quadratic") {
  HomeParams P = exact_params(2.0);
  P.grad_tol = 0.0;
  const RunTrace t = ideals_run(half_squared_norm(1), P, Vec::Constant(1, 3.0), iters(100));
  const RateReport r = residual_rate_report(t, P, 0.0);
  CHECK(r.holds);
  CHECK(r.varrho_hat > 0.0);
  CHECK(r.exact_gradient_factor == Approx(1.0 + 0.9));
  for (std::size_t i = 1; i < r.min_grad.size(); ++i) CHECK(r.min_grad[i] <= r.min_grad[i - 1]);
  const RateReport tight = residual_rate_report(t, P, 0.0, 1e6);
  CHECK_FALSE(tight.holds);
}

TEST_CASE("audit catches a tampered row") {
  HomeParams P = exact_params(1.5);
  RunTrace t = ideals_run(half_squared_norm(1), P, Vec::Constant(1, 2.0), iters(10));
  REQUIRE(t.rows.size() > 3);
  t.rows[2].value_eps += 1.0;
  CHECK_FALSE(audit_line_search(t, P, Algorithm::IDEALS).empty());
}

TEST_CASE("subgradient baselines") {
  SubgradientConfig c;
  c.decaying = false;
  c.alpha0 = 0.01;
  const RunTrace t = subgradient_run(l1_norm(1), c, Vec::Constant(1, 0.5), iters(100));
  CHECK(std::abs(t.x_final[0]) <= 0.01 + 1e-12);
  c.decaying = true;
  c.alpha0 = 0.5;
  const RunTrace d = subgradient_run(l1_norm(1), c, Vec::Constant(1, 0.3), iters(1));
  CHECK(d.x_final[0] == Approx(-0.2));
}

TEST_CASE("safeguarded bounds reject inadmissible gamma") {
  HomeParams P;
  P.p = 2.0;
  P.gamma = 0.9;
  CHECK_THROWS_AS(safeguarded_bounds(quartic_well(), P, 2.0, 0.5, -0.25), AdmissibilityError);
  P.gamma = 0.05;
  const SmoothnessBounds b = safeguarded_bounds(quartic_well(), P, 2.0, 0.5, -0.25);
  CHECK(b.calL_p > 0.0);
  CHECK(b.sigma > P.gamma);
}

TEST_CASE("names round trip") {
  for (Algorithm a : {Algorithm::HiGDA, Algorithm::PFHiGDA, Algorithm::IDEALS, Algorithm::SGDSS,
                      Algorithm::SGCSS})
    CHECK(algorithm_from_string(to_string(a)) == a);
  CHECK(scenario_from_string("s2") == Scenario::S2);
  CHECK_THROWS_AS(algorithm_from_string("adam"), ConfigError);
}
