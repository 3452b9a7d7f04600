"""Eigenvalues and operator norms of radially symmetric localization operators.

Sets are given in the profile domain (values of r^2); the pi scaling is
applied internally. Reports come back as plain dicts.
"""

import json

from . import _core
from ._core import (
    COMB_CONSTANT,
    CapacityError,
    ConvergenceError,
    DegenerateInputError,
    DomainError,
    Error,
    InconclusiveError,
    IntervalUnion,
    PreconditionError,
    ValidationError,
    cantor_expand,
    cantor_function,
    comb_eigenvalue,
    eigenvalue,
    fk,
    fk_head,
    fk_integral,
    fk_tail,
    lambda0_closed,
    lambda0_recursive,
    linear_grid,
    log_fk,
    log_grid,
    normalized_ratio,
    relative_area,
    verify_failures,
)

__all__ = [
    "COMB_CONSTANT",
    "CapacityError",
    "ConvergenceError",
    "DegenerateInputError",
    "DomainError",
    "Error",
    "InconclusiveError",
    "IntervalUnion",
    "PreconditionError",
    "ValidationError",
    "cantor_expand",
    "cantor_function",
    "comb_eigenvalue",
    "comb_norm",
    "eigenvalue",
    "fk",
    "fk_head",
    "fk_integral",
    "fk_tail",
    "lambda0_closed",
    "lambda0_recursive",
    "linear_grid",
    "log_fk",
    "log_grid",
    "normalized_ratio",
    "operator_norm",
    "relative_area",
    "run_cantor",
    "run_comb",
    "run_ring",
    "spectrum",
    "verify_failures",
]


def spectrum(E, K=None):
    return json.loads(_core.spectrum_json(E, K))


def operator_norm(E):
    return json.loads(_core.operator_norm_json(E))


def comb_norm(s, tol=1e-12):
    return json.loads(_core.comb_norm_json(s, tol))


def run_ring(grid):
    return json.loads(_core.run_ring_json(list(grid)))


def run_comb(grid, tol=1e-12):
    return json.loads(_core.run_comb_json(list(grid), tol))


def run_cantor(n_max, x_per_n=16, fup=False, fup_const=1.0, lambda0_only=False):
    return json.loads(_core.run_cantor_json(n_max, x_per_n, fup, fup_const, lambda0_only))
