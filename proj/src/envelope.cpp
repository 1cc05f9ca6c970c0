#include "itsdeal/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace itsdeal {

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::string fmt_num(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

void require_p(double p, const char* who) {
  if (!(p > 1.0 && p <= 2.0))
    throw DomainError(std::string(who) + ": p must lie in (1, 2], got " + fmt_num(p));
}

}  // namespace

double t_hat_residual(double t) {
  const double lhs = t * (t - 1.0) / 2.0;
  const double rhs = 1.0 - std::pow(1.0 + (2.0 - kSqrt3) * t / (t - 1.0), 1.0 - t);
  return lhs - rhs;
}

double solve_t_hat() {
  static const double root = [] {
    double lo = 1.0 + 1e-6, hi = 2.0;
    // residual(lo) < 0 < residual(hi)
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      if (t_hat_residual(mid) < 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }();
  return root;
}

double kappa(double t) {
  if (!(t > 1.0 && t <= 2.0))
    throw DomainError("kappa: t must lie in (1, 2], got " + fmt_num(t));
  if (t == 2.0) return 1.0;
  const double c = (2.0 + kSqrt3) / 16.0;
  if (t <= solve_t_hat()) return c * (t - 1.0);
  return c * (1.0 - std::pow(3.0 - kSqrt3, 1.0 - t));
}

double tau_lower_bounded(double p, double gamma, double gamma_max, double r, double phi0,
                         double ell0) {
  require_p(p, "tau_lower_bounded");
  if (!(gamma > 0.0)) throw DomainError("tau_lower_bounded: gamma must be positive");
  if (!(gamma_max > 0.0)) throw DomainError("tau_lower_bounded: gamma_max must be positive");
  if (!(r > 0.0)) throw DomainError("tau_lower_bounded: r must be positive");
  if (phi0 < ell0)
    throw DomainError("tau_lower_bounded: f(0) = " + fmt_num(phi0) +
                      " is below the lower bound " + fmt_num(ell0));
  return 2.0 * r + std::pow(std::pow(2.0, p - 1.0) * p * gamma_max * (phi0 - ell0), 1.0 / p);
}

double tau_prox_bounded(double p, double gamma, double gamma_hat, double r, double phi0,
                        double ell0_shifted) {
  require_p(p, "tau_prox_bounded");
  if (!(gamma > 0.0) || !(gamma_hat > 0.0))
    throw DomainError("tau_prox_bounded: gamma and gamma_hat must be positive");
  if (!(r > 0.0)) throw DomainError("tau_prox_bounded: r must be positive");
  const double ell = std::pow(2.0, p - 1.0) / (p * gamma_hat);
  const double denom = std::pow(2.0, 1.0 - p) - ell * p * gamma;
  if (!(denom > 0.0))
    throw AdmissibilityError("tau_prox_bounded: gamma = " + fmt_num(gamma) +
                             " is not below 4^{1-p} gamma_hat = " +
                             fmt_num(std::pow(4.0, 1.0 - p) * gamma_hat));
  const double num = 2.0 * std::pow(r, p) + p * gamma * (phi0 - ell0_shifted);
  return std::pow(num / denom, 1.0 / p);
}

SmoothnessBounds smoothness_constants(double p, double gamma, double rho, double r,
                                      double tau_bar, double gamma_max) {
  require_p(p, "smoothness_constants");
  if (!(gamma > 0.0)) throw DomainError("smoothness_constants: gamma must be positive");
  if (!(rho >= 0.0)) throw DomainError("smoothness_constants: rho must be nonnegative");
  if (!(r > 0.0) || !(tau_bar > 0.0))
    throw DomainError("smoothness_constants: r and tau_bar must be positive");

  const double kp = kappa(p);
  const double scale = kp * std::pow(r + tau_bar, p - 2.0);
  const double sigma = rho > 0.0 ? std::min(gamma_max, scale / rho) : gamma_max;
  if (gamma >= gamma_max)
    throw AdmissibilityError("smoothness_constants: gamma = " + fmt_num(gamma) +
                             " must be below gamma_max = " + fmt_num(gamma_max));
  const double denom = scale - rho * gamma;
  if (!(denom > 0.0))
    throw AdmissibilityError("smoothness_constants: gamma = " + fmt_num(gamma) +
                             " must be below (kappa_p/rho)(r+tau)^{p-2} = " + fmt_num(scale / rho));

  SmoothnessBounds b;
  b.r = r;
  b.tau = tau_bar;
  b.gamma_max = gamma_max;
  b.sigma = sigma;
  b.L_p = std::sqrt((4.0 * scale * tau_bar + 2.0 * std::pow(r + tau_bar, p - 1.0)) / denom);
  b.calL_p = std::pow(2.0, 2.0 - p) / gamma * std::pow(std::sqrt(2.0 * r) + b.L_p, p - 1.0);
  return b;
}

namespace {

struct Candidate {
  double value;
  Vec y;
};

constexpr std::size_t kMaxCandidates = 64;

std::vector<Candidate> keep_best(std::vector<Candidate> c) {
  std::sort(c.begin(), c.end(),
            [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  if (c.size() > kMaxCandidates) c.resize(kMaxCandidates);
  return c;
}

}  // namespace

EnvelopeEvaluation exact_envelope_oracle(const WeaklyConvexFn& f, double p, double gamma,
                                         const Vec& x, const GridSpec& grid) {
  const int dim = static_cast<int>(x.size());
  if (dim < 1 || dim > 2) throw DimensionError("exact_envelope_oracle: dimension must be 1 or 2");
  if (f.dim != dim) throw DimensionError("exact_envelope_oracle: function/point dimension mismatch");
  if (!(p > 1.0) || !(gamma > 0.0)) throw DomainError("exact_envelope_oracle: need p > 1, gamma > 0");
  if (grid.points < 3 || !(grid.radius > 0.0)) throw DomainError("exact_envelope_oracle: bad grid");

  const double R = grid.radius;
  const int N = grid.points;
  const double h = 2.0 * R / (N - 1);
  const double inv = 1.0 / (p * gamma);

  Vec y(dim);
  auto phi = [&](const Vec& v) { return f.value(v) + inv * std::pow((x - v).norm(), p); };
  auto coord = [&](int i) { return -R + h * i; };

  std::vector<Candidate> cands;
  if (dim == 1) {
    std::vector<double> vals(N);
    for (int i = 0; i < N; ++i) {
      y[0] = coord(i);
      vals[i] = phi(y);
    }
    for (int i = 0; i < N; ++i) {
      const bool left = i == 0 || vals[i] <= vals[i - 1];
      const bool right = i == N - 1 || vals[i] <= vals[i + 1];
      if (left && right) {
        y[0] = coord(i);
        cands.push_back({vals[i], y});
      }
    }
  } else {
    std::vector<double> vals(static_cast<std::size_t>(N) * N);
    auto at = [&](int i, int j) -> double& { return vals[static_cast<std::size_t>(i) * N + j]; };
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        y << coord(i), coord(j);
        at(i, j) = phi(y);
      }
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        const double v = at(i, j);
        if ((i > 0 && at(i - 1, j) < v) || (i < N - 1 && at(i + 1, j) < v) ||
            (j > 0 && at(i, j - 1) < v) || (j < N - 1 && at(i, j + 1) < v))
          continue;
        y << coord(i), coord(j);
        cands.push_back({v, y});
      }
  }
  cands = keep_best(std::move(cands));

  // Alternating ternary search inside the box [c - h, c + h] around each candidate.
  for (auto& c : cands) {
    Vec lo = (c.y.array() - h).max(-R).matrix();
    Vec hi = (c.y.array() + h).min(R).matrix();
    for (int round = 0; round < grid.refinements; ++round) {
      for (int axis = 0; axis < dim; ++axis) {
        Vec a = 0.5 * (lo + hi), b = a;
        const double w = hi[axis] - lo[axis];
        a[axis] = lo[axis] + w / 3.0;
        b[axis] = hi[axis] - w / 3.0;
        if (phi(a) <= phi(b)) {
          hi[axis] = b[axis];
        } else {
          lo[axis] = a[axis];
        }
      }
    }
    const Vec mid = 0.5 * (lo + hi);
    const double v = phi(mid);
    if (v <= c.value) {
      c.value = v;
      c.y = mid;
    }
  }
  cands = keep_best(std::move(cands));

  EnvelopeEvaluation out;
  out.value = cands.front().value;
  out.argmin = cands.front().y;
  const double tol = grid.tie_tol * std::max(1.0, std::abs(out.value));
  for (const auto& c : cands) {
    if (c.value > out.value + tol) break;
    const bool duplicate = std::any_of(out.minimizers.begin(), out.minimizers.end(),
                                       [&](const Vec& m) { return (m - c.y).norm() <= 2.0 * h; });
    if (!duplicate) out.minimizers.push_back(c.y);
  }
  return out;
}

double prox_search_radius(const WeaklyConvexFn& f, double p, double gamma, double r,
                          double fallback) {
  r = std::max(r, 1e-12);
  if (f.lower_bound && p > 1.0 && p <= 2.0) {
    const double phi0 = f.value(Vec::Zero(f.dim));
    return tau_lower_bounded(p, gamma, gamma, r, phi0, std::min(*f.lower_bound, phi0));
  }
  return std::max(fallback, 2.0 * r);
}

}  // namespace itsdeal
