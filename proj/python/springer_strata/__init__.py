"""Orbit strata of x-stable partial flags for a nilpotent operator, over prime fields."""

import json as _json

from . import _core
from ._core import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    SuiteConfigError,
    a_dims,
    alpha_from_kappa,
    brute_force_stratify,
    count_subspaces,
    delta_epsilon,
    enumerate_alpha,
    fiber_dimension,
    gaussian_binomial,
    kappa_from_alpha,
    kernel_dims,
    stratum_invariants,
)


def strata(jordan, dims, q=2):
    """Invariants of every stratum, no enumeration. Same schema as the CLI JSON."""
    return _json.loads(_core._strata_json(list(jordan), list(dims), q))


def verify(jordan, dims, q=2, checks="verify", budget=DEFAULT_BUDGET):
    """Exhaustive point-count verification of one instance. Same schema as the CLI JSON."""
    return _json.loads(_core._verify_json(list(jordan), list(dims), q, checks, budget))


__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "SuiteConfigError",
    "a_dims",
    "alpha_from_kappa",
    "brute_force_stratify",
    "count_subspaces",
    "delta_epsilon",
    "enumerate_alpha",
    "fiber_dimension",
    "gaussian_binomial",
    "kappa_from_alpha",
    "kernel_dims",
    "strata",
    "stratum_invariants",
    "verify",
]
