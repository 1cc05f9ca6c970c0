#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <doctest.h>

#include "itsdeal/envelope.hpp"
#include "itsdeal/prox.hpp"

using namespace itsdeal;
using doctest::Approx;

TEST_CASE("kappa at the endpoints and on the first branch") {
  CHECK(kappa(2.0) == 1.0);
  CHECK(kappa(1.1) == Approx((2.0 + std::sqrt(3.0)) * 0.1 / 16.0).epsilon(1e-14));
  CHECK_THROWS_AS(kappa(1.0), DomainError);
  CHECK_THROWS_AS(kappa(2.1), DomainError);
  CHECK_THROWS_AS(kappa(kNaN), DomainError);
}

TEST_CASE("kappa on the second branch matches 50-digit arithmetic") {
  using HP = boost::multiprecision::cpp_dec_float_50;
  const HP s3 = boost::multiprecision::sqrt(HP(3));
  for (double t : {1.4, 1.6, 1.9, 1.99}) {
    const HP ref = (2 + s3) / 16 * (1 - boost::multiprecision::pow(3 - s3, 1 - HP(t)));
    CHECK(std::abs(kappa(t) - ref.convert_to<double>()) <= 1e-15);
  }
}

TEST_CASE("t_hat is the root of the branch equation") {
  const double th = solve_t_hat();
  CHECK(std::abs(th - 1.3214) <= 5e-4);
  CHECK(std::abs(t_hat_residual(th)) <= 1e-10);
  CHECK(std::abs(t_hat_residual(2.0)) > 1e-3);
}

TEST_CASE("prox radius for a lower-bounded function") {
  CHECK(tau_lower_bounded(2.0, 0.5, 1.0, 1.0, 0.0, 0.0) == Approx(2.0));
  CHECK(tau_lower_bounded(2.0, 0.5, 1.0, 1.0, 2.0, 0.0) == Approx(2.0 + 2.0 * std::sqrt(2.0)));
  CHECK_THROWS_AS(tau_lower_bounded(2.0, 0.5, 1.0, 1.0, -1.0, 0.0), DomainError);
  double prev = 0;
  for (double gmax : {0.1, 0.5, 1.0, 2.0}) {
    const double t = tau_lower_bounded(1.5, 0.05, gmax, 1.0, 3.0, -1.0);
    CHECK(t > prev);
    prev = t;
  }
}

TEST_CASE("prox radius under prox-boundedness") {
  CHECK(tau_prox_bounded(2.0, 0.1, 1.0, 1.0, 0.0, 0.0) == Approx(std::sqrt(20.0 / 3.0)));
  CHECK_THROWS_AS(tau_prox_bounded(2.0, 0.25, 1.0, 1.0, 0.0, 0.0), AdmissibilityError);
  CHECK_THROWS_AS(tau_prox_bounded(2.0, 0.3, 1.0, 1.0, 0.0, 0.0), AdmissibilityError);
  double prev = 0;
  for (double g : {0.1, 0.2, 0.24, 0.249, 0.2499}) {
    const double t = tau_prox_bounded(2.0, g, 1.0, 1.0, 0.0, 0.0);
    CHECK(t > prev);
    prev = t;
  }
  CHECK(prev > 10.0);
}

TEST_CASE("Hölder constants of the envelope") {
  const SmoothnessBounds b = smoothness_constants(2.0, 0.5, 0.0, 1.0, 2.0);
  CHECK(b.L_p == Approx(std::sqrt(14.0)));
  CHECK(b.calL_p == Approx((std::sqrt(2.0) + std::sqrt(14.0)) / 0.5));
  const SmoothnessBounds b1 = smoothness_constants(2.0, 1.0, 0.0, 1.0, 2.0);
  CHECK(b.calL_p / b1.calL_p == Approx(2.0));
  const SmoothnessBounds w = smoothness_constants(2.0, 0.5, 0.1, 1.0, 2.0);
  CHECK(w.L_p == Approx(std::sqrt(14.0 / 0.95)));
  CHECK_THROWS_AS(smoothness_constants(2.0, 1.0, 1.0, 1.0, 2.0), AdmissibilityError);
  CHECK_THROWS_AS(smoothness_constants(2.0, 2.0, 0.0, 1.0, 2.0, 1.0), AdmissibilityError);
}

TEST_CASE("basic inequality on random pairs") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double r = 2.0;
  for (double p : {1.1, 1.3, 1.5, 1.8, 2.0}) {
    for (int i = 0; i < 500; ++i) {
      Vec a(2), b(2);
      do { a << u(rng), u(rng); } while (a.norm() > 1.0);
      do { b << u(rng), u(rng); } while (b.norm() > 1.0);
      a *= r;
      b *= r;
      const double lhs = (power_map(a, p) - power_map(b, p)).dot(a - b);
      CHECK(lhs >= kappa(p) * std::pow(r, p - 2.0) * (a - b).squaredNorm() * (1 - 1e-12));
    }
  }
}

TEST_CASE("exact oracle on closed-form cases") {
  GridSpec grid;
  grid.radius = 4.0;
  const Vec x = Vec::Constant(1, 1.7);

  const auto z = exact_envelope_oracle(zero_function(1), 1.5, 0.7, x, grid);
  CHECK(z.value == Approx(0.0));
  CHECK(z.argmin[0] == Approx(1.7).epsilon(1e-8));

  const auto q = exact_envelope_oracle(half_squared_norm(1), 2.0, 0.5, x, grid);
  CHECK(q.argmin[0] == Approx(1.7 / 1.5).epsilon(1e-8));
  CHECK(q.value == Approx(1.7 * 1.7 / 3.0).epsilon(1e-10));

  Vec x2(2);
  x2 << 1.0, -0.5;
  const auto q2 = exact_envelope_oracle(half_squared_norm(2), 2.0, 1.0, x2, grid);
  CHECK((q2.argmin - x2 / 2.0).norm() <= 1e-6);

  CHECK_THROWS_AS(exact_envelope_oracle(half_squared_norm(3), 2.0, 1.0, Vec::Zero(3), grid),
                  DimensionError);
}

TEST_CASE("quartic well: unique prox at 0 for p <= 2, two minimizers for p = 3") {
  const WeaklyConvexFn f = quartic_well();
  GridSpec grid;
  grid.radius = 4.0;
  const Vec x0 = Vec::Zero(1);
  for (double p : {1.25, 1.5, 2.0}) {
    const auto ev = exact_envelope_oracle(f, p, std::min(1.0 / p, 0.6), x0, grid);
    REQUIRE(ev.minimizers.size() == 1);
    CHECK(std::abs(ev.argmin[0]) <= 1e-6);
  }
  const auto ev = exact_envelope_oracle(f, 3.0, 0.6, x0, grid);
  REQUIRE(ev.minimizers.size() == 2);
  CHECK(ev.minimizers[0][0] == Approx(-ev.minimizers[1][0]));
}

TEST_CASE("grid radius covers the prox") {
  const WeaklyConvexFn f = quartic_well();
  const double rad = prox_search_radius(f, 1.5, 0.2, 2.0);
  CHECK(rad >= 2.0);
  GridSpec grid;
  grid.radius = rad;
  for (double x : {-2.0, -0.3, 0.9, 2.0}) {
    const auto ev = exact_envelope_oracle(f, 1.5, 0.2, Vec::Constant(1, x), grid);
    CHECK(std::abs(ev.argmin[0]) < rad * 0.999);
  }
}
