"""Graded growth of group algebras: Python bindings."""

from fractions import Fraction

from . import _core
from ._core import (
    ContractError,
    Error,
    ResourceError,
    SearchFailure,
    UsageError,
    builtin_finite_groups,
    find_dead_ends,
    free_graded_dims,
    graded_dims,
    growth_report,
    relator_degrees,
    run_cli,
    witt_ranks,
)


def gs_certificate(d, degrees, p=2, grid=None):
    """GS certificate for d generators and relators of the given degrees.

    t and value come back as Fractions.
    """
    args = (d, list(degrees), p) if grid is None else (d, list(degrees), p, grid)
    cert = _core.gs_certificate(*args)
    cert["t"] = Fraction(cert["t"])
    cert["value"] = Fraction(cert["value"])
    return cert


__all__ = [
    "ContractError",
    "Error",
    "ResourceError",
    "SearchFailure",
    "UsageError",
    "builtin_finite_groups",
    "find_dead_ends",
    "free_graded_dims",
    "graded_dims",
    "growth_report",
    "gs_certificate",
    "relator_degrees",
    "run_cli",
    "witt_ranks",
]
