#pragma once

#include <memory>
#include <optional>

#include "itsdeal/config.hpp"
#include "itsdeal/itsdeal.hpp"
#include "itsdeal/objective.hpp"
#include "itsdeal/trace.hpp"

namespace itsdeal {

struct Problem {
  WeaklyConvexFn f;
  Vec x0;
  std::optional<Vec> x_true;
  std::shared_ptr<const SparseRecoveryInstance> instance;  // rsr only
};

/// Builds the objective selected by `problem`. For rsr the instance is read
/// from instance.file or generated from instance.* and `seed`.
Problem make_problem(const Config& cfg);
/// Same, with an already generated instance (used by the bench harness).
Problem make_problem(const Config& cfg, std::shared_ptr<const SparseRecoveryInstance> inst);

/// Hölder constants for HiGDA: higda.calL when given, else safeguarded mode.
/// Throws ConfigError naming the missing bound when neither is available.
SmoothnessBounds resolve_higda_bounds(const Config& cfg, const WeaklyConvexFn& f);

/// Runs cfg["alg"] on the problem. In safeguarded mode (safeguard.radius set)
/// gamma is checked for admissibility first.
RunTrace run_algorithm(const Config& cfg, const Problem& prob);

/// Resolved config followed by meta.build.
HeaderEntries output_header(const Config& cfg);

}  // namespace itsdeal
