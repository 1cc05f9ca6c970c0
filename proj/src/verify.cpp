#include "itsdeal/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "itsdeal/envelope.hpp"
#include "itsdeal/objective.hpp"
#include "itsdeal/prox.hpp"

namespace itsdeal {

namespace {

class Group {
 public:
  explicit Group(std::string name) { g_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++g_.checks;
    if (!ok) {
      ++g_.failures;
      g_.passed = false;
      if (g_.detail.empty()) g_.detail = what;
    }
  }
  VerifyGroup done() {
    if (g_.detail.empty()) g_.detail = std::to_string(g_.checks) + " checks";
    return g_;
  }

 private:
  VerifyGroup g_;
};

VerifyGroup verify_kappa() {
  Group g("kappa");
  g.check(kappa(2.0) == 1.0, "kappa(2) != 1");
  const double th = solve_t_hat();
  g.check(std::abs(th - 1.3214) <= 5e-4, "t_hat = " + fmt17(th));
  g.check(std::abs(t_hat_residual(th)) <= 1e-10, "residual at t_hat too large");
  for (int i = 1; i <= 1000; ++i) {
    const double t = 1.0 + i / 1000.0;
    g.check(kappa(t) > 0.0, "kappa(" + fmt17(t) + ") <= 0");
  }
  return g.done();
}

VerifyGroup verify_basic_inequality(std::mt19937_64& rng) {
  Group g("basic_inequality");
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double r = 1.5;
  for (double p : {1.1, 1.25, 1.5, 1.75, 2.0}) {
    const double kp = kappa(p);
    for (int i = 0; i < 2500; ++i) {
      Vec a(3), b(3);
      do { a << u(rng), u(rng), u(rng); } while (a.norm() > 1.0);
      do { b << u(rng), u(rng), u(rng); } while (b.norm() > 1.0);
      a *= r;
      b *= r;
      const double lhs = (power_map(a, p) - power_map(b, p)).dot(a - b);
      const double rhs = kp * std::pow(r, p - 2.0) * (a - b).squaredNorm();
      g.check(lhs >= rhs * (1.0 - 1e-12), "basic inequality fails at p = " + fmt17(p));
    }
  }
  return g.done();
}

VerifyGroup verify_quartic_prox() {
  Group g("quartic_prox");
  const WeaklyConvexFn f = quartic_well();
  GridSpec grid;
  grid.radius = 4.0;
  const Vec x0 = Vec::Zero(1);
  for (double p : {1.25, 1.5, 2.0}) {
    const double gamma = p == 1.5 ? 0.6 : 1.0 / p;
    const auto ev = exact_envelope_oracle(f, p, gamma, x0, grid);
    g.check(ev.minimizers.size() == 1 && std::abs(ev.argmin[0]) <= 1e-6,
            "p = " + fmt17(p) + ": expected the unique minimizer 0, got " + fmt17(ev.argmin[0]));
  }
  const auto ev = exact_envelope_oracle(f, 3.0, 0.6, x0, grid);
  const bool two = ev.minimizers.size() == 2;
  g.check(two, "p = 3: expected two minimizers, got " + std::to_string(ev.minimizers.size()));
  if (two) {
    const double a = ev.minimizers[0][0], b = ev.minimizers[1][0];
    g.check(std::abs(a + b) <= 1e-6 && std::abs(a) > 0.1, "p = 3: minimizers not symmetric");
  }
  return g.done();
}

// Random (x, p, gamma) with the exact 1-D prox on the quadratic or the quartic.
struct ExactCase {
  double p, gamma;
  Vec x, y;
  const WeaklyConvexFn* f;
};

ExactCase draw_case(std::mt19937_64& rng, const WeaklyConvexFn& quad, const WeaklyConvexFn& quart,
                    int i) {
  static const double ps[] = {1.25, 1.5, 2.0};
  std::uniform_real_distribution<double> ux(-2.0, 2.0);
  ExactCase c;
  c.p = ps[i % 3];
  c.f = i % 2 ? &quart : &quad;
  c.gamma = i % 2 ? 0.2 : 0.9;
  c.x = Vec::Constant(1, ux(rng));
  c.y = exact_prox(*c.f, c.p, c.gamma, c.x);
  return c;
}

VerifyGroup verify_absolute_bound(std::mt19937_64& rng, bool violate) {
  Group g("absolute_gradient_error");
  const WeaklyConvexFn quad = half_squared_norm(1), quart = quartic_well();
  std::uniform_real_distribution<double> ud(1e-4, 0.5);
  for (int i = 0; i < 1000; ++i) {
    const ExactCase c = draw_case(rng, quad, quart, i);
    const double delta = ud(rng);
    const Vec y_eps = c.y + Vec::Constant(1, i % 4 < 2 ? delta : -delta);
    const Vec g_eps = envelope_gradient(c.p, c.gamma, c.x, y_eps);
    const Vec g_true = envelope_gradient(c.p, c.gamma, c.x, c.y);
    const double claimed = violate ? delta * 1e-3 : delta;
    const double bound = std::pow(2.0, 2.0 - c.p) / c.gamma * std::pow(claimed, c.p - 1.0);
    g.check((g_eps - g_true).norm() <= bound * (1.0 + 1e-12) + 1e-14,
            "gradient error " + fmt17((g_eps - g_true).norm()) + " > " + fmt17(bound));
  }
  return g.done();
}

VerifyGroup verify_relative_bound(std::mt19937_64& rng) {
  Group g("relative_gradient_error");
  const WeaklyConvexFn quad = half_squared_norm(1), quart = quartic_well();
  std::uniform_real_distribution<double> uu(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const ExactCase c = draw_case(rng, quad, quart, i);
    const double mu = default_mu(c.p);
    const double dist = (c.x - c.y).norm();
    const Vec y_eps = c.y + Vec::Constant(1, (i % 4 < 2 ? 0.5 : -0.5) * uu(rng) * mu * dist);
    const ProxCertificate cert = certify(*c.f, c.p, c.gamma, c.x, y_eps, mu, 0.0, c.y);
    g.check(cert.certified, "constructed pair is not certified");
    if (!cert.certified) continue;
    const Vec g_eps = envelope_gradient(c.p, c.gamma, c.x, y_eps);
    const Vec g_true = envelope_gradient(c.p, c.gamma, c.x, c.y);
    const double bound = std::pow(2.0, 2.0 - c.p) * std::pow(mu, c.p - 1.0) * g_eps.norm();
    g.check((g_eps - g_true).norm() <= bound * (1.0 + 1e-12) + 1e-14,
            "relative gradient error bound fails");
  }
  return g.done();
}

VerifyGroup verify_finite_differences(std::mt19937_64& rng) {
  Group g("finite_differences");
  std::uniform_real_distribution<double> ux(-2.0, 2.0);
  const double h = 1e-5;
  for (int dim = 1; dim <= 5; ++dim) {
    const WeaklyConvexFn f = half_squared_norm(dim);
    for (int i = 0; i < 100; ++i) {
      const double p = (i % 4 == 0) ? 2.0 : 1.2 + 0.2 * (i % 4);
      const double gamma = 0.9;
      Vec x(dim);
      for (int j = 0; j < dim; ++j) x[j] = ux(rng);
      auto F = [&](const Vec& z) {
        return prox_objective(f, p, gamma, z, f.exact_prox(p, gamma, z));
      };
      const Vec grad = envelope_gradient(p, gamma, x, f.exact_prox(p, gamma, x));
      Vec fd(dim);
      for (int j = 0; j < dim; ++j) {
        Vec a = x, b = x;
        a[j] += h;
        b[j] -= h;
        fd[j] = (F(a) - F(b)) / (2.0 * h);
      }
      const double err = (grad - fd).norm() / std::max(grad.norm(), 1e-8);
      g.check(err <= 1e-4, "dim " + std::to_string(dim) + ": relative error " + fmt17(err));
    }
  }
  return g.done();
}

VerifyGroup verify_weak_convexity(std::mt19937_64& rng) {
  Group g("weak_convexity");
  InstanceParams ip;
  ip.n = 20;
  ip.m = 10;
  ip.k1 = 3;
  ip.k2 = 2;
  ip.seed = 3;
  const auto inst = std::make_shared<const SparseRecoveryInstance>(generate_instance(ip));
  const std::vector<WeaklyConvexFn> fns = {half_squared_norm(3), quartic_well(), l1_norm(3),
                                           clipped_quadratic_sum(3, 1.0),
                                           clipped_quadratic_sum(2, 2.5),
                                           robust_sparse_recovery(inst)};
  std::uniform_real_distribution<double> ux(-2.0, 2.0), ul(0.0, 1.0);
  for (const auto& f : fns) {
    for (int i = 0; i < 1700; ++i) {
      Vec x(f.dim), y(f.dim);
      for (int j = 0; j < f.dim; ++j) {
        x[j] = ux(rng);
        y[j] = ux(rng);
      }
      const double l = ul(rng);
      const double lhs = f.value(l * x + (1.0 - l) * y);
      const double rhs = l * f.value(x) + (1.0 - l) * f.value(y) +
                         f.rho * l * (1.0 - l) / 2.0 * (x - y).squaredNorm();
      g.check(lhs <= rhs + 1e-9 * std::max(1.0, std::abs(rhs)),
              f.name + ": three-point inequality fails");
      const double mono = (f.subgradient(x) - f.subgradient(y)).dot(x - y);
      g.check(mono >= -f.rho * (x - y).squaredNorm() - 1e-9 * std::max(1.0, std::abs(mono)),
              f.name + ": hypomonotonicity fails");
    }
  }
  return g.done();
}

}  // namespace

std::vector<VerifyGroup> run_verify(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::vector<VerifyGroup> out;
  out.push_back(verify_kappa());
  out.push_back(verify_basic_inequality(rng));
  out.push_back(verify_quartic_prox());
  out.push_back(verify_absolute_bound(rng, opts.fixture == "delta-violation"));
  out.push_back(verify_relative_bound(rng));
  out.push_back(verify_finite_differences(rng));
  out.push_back(verify_weak_convexity(rng));
  return out;
}

std::string verify_report_json(const std::vector<VerifyGroup>& groups) {
  nlohmann::json j;
  bool all = true;
  j["groups"] = nlohmann::json::array();
  for (const auto& g : groups) {
    all = all && g.passed;
    j["groups"].push_back({{"name", g.name},
                           {"passed", g.passed},
                           {"checks", g.checks},
                           {"failures", g.failures},
                           {"detail", g.detail}});
  }
  j["passed"] = all;
  return j.dump(2);
}

}  // namespace itsdeal
