#include "itsdeal/objective.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

namespace itsdeal {

namespace {

double sign0(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

void check_dim(const Vec& x, int dim, const char* what) {
  if (x.size() != dim) {
    std::ostringstream msg;
    msg << what << ": expected dimension " << dim << ", got " << x.size();
    throw DimensionError(msg.str());
  }
}

// Root of gamma t s^{2-p} = (1-t)^{p-1} on [0,1]; the prox of ½‖·‖² is t x.
double quadratic_prox_scale(double p, double gamma, double s) {
  if (p == 2.0) return 1.0 / (1.0 + gamma);
  const double c = gamma * std::pow(s, 2.0 - p);
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (c * mid - std::pow(1.0 - mid, p - 1.0) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

WeaklyConvexFn zero_function(int dim) {
  WeaklyConvexFn f;
  f.name = "zero";
  f.dim = dim;
  f.rho = 0.0;
  f.lower_bound = 0.0;
  f.value = [](const Vec&) { return 0.0; };
  f.subgradient = [](const Vec& x) -> Vec { return Vec::Zero(x.size()); };
  f.exact_prox = [](double, double, const Vec& x) -> Vec { return x; };
  return f;
}

WeaklyConvexFn half_squared_norm(int dim) {
  WeaklyConvexFn f;
  f.name = "quadratic";
  f.dim = dim;
  f.rho = 0.0;
  f.lower_bound = 0.0;
  f.value = [](const Vec& x) { return 0.5 * x.squaredNorm(); };
  f.subgradient = [](const Vec& x) -> Vec { return x; };
  f.exact_prox = [](double p, double gamma, const Vec& x) -> Vec {
    const double s = x.norm();
    if (s == 0.0) return Vec::Zero(x.size());
    return quadratic_prox_scale(p, gamma, s) * x;
  };
  return f;
}

WeaklyConvexFn quartic_well() {
  WeaklyConvexFn f;
  f.name = "quartic";
  f.dim = 1;
  f.rho = 2.0;
  f.lower_bound = -0.25;
  f.value = [](const Vec& x) {
    const double t = x[0];
    return t * t * t * t - t * t;
  };
  f.subgradient = [](const Vec& x) -> Vec {
    const double t = x[0];
    Vec g(1);
    g[0] = 4.0 * t * t * t - 2.0 * t;
    return g;
  };
  return f;
}

WeaklyConvexFn l1_norm(int dim) {
  WeaklyConvexFn f;
  f.name = "abs";
  f.dim = dim;
  f.rho = 0.0;
  f.lower_bound = 0.0;
  f.value = [](const Vec& x) { return x.lpNorm<1>(); };
  f.subgradient = [](const Vec& x) -> Vec { return x.unaryExpr(&sign0); };
  return f;
}

double clipped_quadratic(double t, double sigma) {
  const double a = std::abs(t);
  if (a <= 1.0 / sigma) return 2.0 * sigma * a - sigma * sigma * t * t;
  return 1.0;
}

double clipped_quadratic_subgrad(double t, double sigma) {
  const double a = std::abs(t);
  if (t == 0.0 || a >= 1.0 / sigma) return 0.0;
  return 2.0 * sigma * sign0(t) - 2.0 * sigma * sigma * t;
}

double clipped_quadratic_modulus(double sigma) { return 2.0 * sigma * sigma; }

WeaklyConvexFn clipped_quadratic_sum(int dim, double sigma) {
  if (!(sigma > 0)) throw DomainError("clipped_quadratic_sum: sigma must be positive");
  WeaklyConvexFn f;
  f.name = "clipped";
  f.dim = dim;
  f.rho = clipped_quadratic_modulus(sigma);
  f.lower_bound = 0.0;
  f.value = [sigma](const Vec& x) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) s += clipped_quadratic(x[i], sigma);
    return s;
  };
  f.subgradient = [sigma](const Vec& x) -> Vec {
    return x.unaryExpr([sigma](double t) { return clipped_quadratic_subgrad(t, sigma); });
  };
  return f;
}

SparseRecoveryInstance generate_instance(const InstanceParams& params) {
  const auto& [n, m, k1, k2, sigma, lambda_bar, seed] = params;
  if (n < 1 || m < 1) throw DomainError("generate_instance: n and m must be positive");
  if (k1 < 0 || k1 > n) throw DomainError("generate_instance: need 0 <= k1 <= n");
  if (k2 < 0 || k2 > m) throw DomainError("generate_instance: need 0 <= k2 <= m");
  if (!(sigma > 0)) throw DomainError("generate_instance: sigma must be positive");
  if (!(lambda_bar >= 0)) throw DomainError("generate_instance: lambda_bar must be nonnegative");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> sensing(0.0, 1.0 / std::sqrt(static_cast<double>(m)));
  std::normal_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> outlier(2.0, 1.0);

  auto nonzero = [&rng](std::normal_distribution<double>& d) {
    double v = 0.0;
    while (v == 0.0) v = d(rng);
    return v;
  };
  auto choose_support = [&rng](int size, int count) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    // Partial Fisher-Yates keeps the draw count independent of the library's shuffle.
    for (int i = 0; i < count; ++i) {
      std::uniform_int_distribution<int> pick(i, size - 1);
      std::swap(idx[i], idx[pick(rng)]);
    }
    idx.resize(count);
    std::sort(idx.begin(), idx.end());
    return idx;
  };

  SparseRecoveryInstance inst;
  inst.params = params;
  inst.A.resize(m, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) inst.A(i, j) = sensing(rng);

  inst.x_true = Vec::Zero(n);
  for (int i : choose_support(n, k1)) inst.x_true[i] = nonzero(unit);

  inst.e = Vec::Zero(m);
  for (int i : choose_support(m, k2)) inst.e[i] = nonzero(outlier);

  inst.y = inst.A * inst.x_true + inst.e;
  return inst;
}

double rsr_value(const SparseRecoveryInstance& inst, const Vec& x) {
  check_dim(x, static_cast<int>(inst.A.cols()), "rsr_value");
  const double sigma = inst.params.sigma;
  double pen = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) pen += clipped_quadratic(x[i], sigma);
  return (inst.A * x - inst.y).lpNorm<1>() + inst.params.lambda_bar * pen;
}

Vec rsr_subgrad(const SparseRecoveryInstance& inst, const Vec& x) {
  check_dim(x, static_cast<int>(inst.A.cols()), "rsr_subgrad");
  const double sigma = inst.params.sigma;
  const Vec s = (inst.A * x - inst.y).unaryExpr(&sign0);
  Vec g = inst.A.transpose() * s;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    g[i] += inst.params.lambda_bar * clipped_quadratic_subgrad(x[i], sigma);
  return g;
}

WeaklyConvexFn robust_sparse_recovery(std::shared_ptr<const SparseRecoveryInstance> inst) {
  WeaklyConvexFn f;
  f.name = "rsr";
  f.dim = static_cast<int>(inst->A.cols());
  // l1 loss is convex; each penalty coordinate contributes lambda_bar * 2 sigma².
  f.rho = inst->params.lambda_bar * clipped_quadratic_modulus(inst->params.sigma);
  f.lower_bound = 0.0;
  f.value = [inst](const Vec& x) { return rsr_value(*inst, x); };
  f.subgradient = [inst](const Vec& x) { return rsr_subgrad(*inst, x); };
  f.value_and_subgradient = [inst](const Vec& x, Vec& g) {
    check_dim(x, static_cast<int>(inst->A.cols()), "rsr");
    const double sigma = inst->params.sigma;
    const double lam = inst->params.lambda_bar;
    const Vec r = inst->A * x - inst->y;
    g.noalias() = inst->A.transpose() * r.unaryExpr(&sign0);
    double pen = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      pen += clipped_quadratic(x[i], sigma);
      g[i] += lam * clipped_quadratic_subgrad(x[i], sigma);
    }
    return r.lpNorm<1>() + lam * pen;
  };
  return f;
}

double relative_error(const Vec& x, const Vec& x_true) {
  if (x.size() != x_true.size()) throw DimensionError("relative_error: dimension mismatch");
  const double denom = x_true.norm();
  if (denom == 0.0) return (x - x_true).norm() == 0.0 ? 0.0 : kInf;
  return (x - x_true).norm() / denom;
}

namespace {

void write_block(std::ostream& os, const char* name, const Mat& M) {
  os << name << ' ' << M.rows() << ' ' << M.cols() << '\n';
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (j) os << ' ';
      os << M(i, j);
    }
    os << '\n';
  }
}

Mat read_block(std::istream& is, const std::string& expected) {
  std::string name;
  Eigen::Index rows = 0, cols = 0;
  if (!(is >> name >> rows >> cols) || name != expected)
    throw ConfigError("read_instance: expected block '" + expected + "'");
  Mat M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (!(is >> M(i, j))) throw ConfigError("read_instance: truncated block '" + expected + "'");
  return M;
}

}  // namespace

void write_instance(std::ostream& os, const SparseRecoveryInstance& inst) {
  const auto& p = inst.params;
  const auto old_prec = os.precision(17);
  os << "# format=itsdeal-rsr-instance-v1\n"
     << "# n=" << p.n << "\n# m=" << p.m << "\n# k1=" << p.k1 << "\n# k2=" << p.k2
     << "\n# sigma=" << p.sigma << "\n# lambda_bar=" << p.lambda_bar << "\n# seed=" << p.seed
     << '\n';
  write_block(os, "A", inst.A);
  write_block(os, "y", inst.y);
  write_block(os, "x_true", inst.x_true);
  write_block(os, "e", inst.e);
  os.precision(old_prec);
}

SparseRecoveryInstance read_instance(std::istream& is) {
  SparseRecoveryInstance inst;
  bool format_ok = false;
  std::string line;
  while (is.peek() == '#' && std::getline(is, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(1, eq - 1);
    key.erase(0, key.find_first_not_of(' '));
    const std::string val = line.substr(eq + 1);
    auto& p = inst.params;
    if (key == "format") format_ok = (val == "itsdeal-rsr-instance-v1");
    else if (key == "n") p.n = std::stoi(val);
    else if (key == "m") p.m = std::stoi(val);
    else if (key == "k1") p.k1 = std::stoi(val);
    else if (key == "k2") p.k2 = std::stoi(val);
    else if (key == "sigma") p.sigma = std::stod(val);
    else if (key == "lambda_bar") p.lambda_bar = std::stod(val);
    else if (key == "seed") p.seed = std::stoull(val);
    else throw ConfigError("read_instance: unknown header key '" + key + "'");
  }
  if (!format_ok) throw ConfigError("read_instance: missing or unsupported format header");
  inst.A = read_block(is, "A");
  inst.y = read_block(is, "y");
  inst.x_true = read_block(is, "x_true");
  inst.e = read_block(is, "e");
  if (inst.A.rows() != inst.params.m || inst.A.cols() != inst.params.n ||
      inst.y.size() != inst.params.m || inst.x_true.size() != inst.params.n ||
      inst.e.size() != inst.params.m)
    throw ConfigError("read_instance: block shapes disagree with header");
  return inst;
}

}  // namespace itsdeal
