#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace itsdeal {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A theoretical hypothesis (step-size cap, admissible gamma, ...) is violated.
class AdmissibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ‖u‖^{p-2} u with the 0/0 := 0 convention.
inline Vec power_map(const Vec& u, double p) {
  const double n = u.norm();
  if (n == 0.0) return Vec::Zero(u.size());
  return std::pow(n, p - 2.0) * u;
}

/// 17 significant digits, which round-trips every double; "nan" and "inf" for specials.
inline std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Version string baked in at configure time (git describe).
const char* build_describe();

}  // namespace itsdeal
