"""Inexact two-level smoothing descent for weakly convex problems."""

import json as _json

from ._core import (
    AdmissibilityError,
    ConfigError,
    DimensionError,
    DomainError,
    SparseRecoveryInstance,
    build_describe,
    clipped_quadratic,
    clipped_quadratic_subgrad,
    config_defaults,
    generate_instance,
    inexact_oracle,
    instance_from_text,
    kappa,
    read_trace,
    relative_error,
    rsr_subgrad,
    rsr_value,
    smoothness_constants,
    solve,
    solve_t_hat,
    tau_lower_bounded,
    tau_prox_bounded,
)
from ._core import verify as _verify


def verify(fixture=""):
    """Run the invariant suites and return the parsed report."""
    return _json.loads(_verify(fixture))


__all__ = [
    "AdmissibilityError",
    "ConfigError",
    "DimensionError",
    "DomainError",
    "SparseRecoveryInstance",
    "build_describe",
    "clipped_quadratic",
    "clipped_quadratic_subgrad",
    "config_defaults",
    "generate_instance",
    "inexact_oracle",
    "instance_from_text",
    "kappa",
    "read_trace",
    "relative_error",
    "rsr_subgrad",
    "rsr_value",
    "smoothness_constants",
    "solve",
    "solve_t_hat",
    "tau_lower_bounded",
    "tau_prox_bounded",
    "verify",
]
