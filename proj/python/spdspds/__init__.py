"""Symmetric primal-dual simplex over Tucker's compact tableau."""

import json
import os

from ._core import (
    DEFAULT_TOLERANCE,
    Error,
    MpsError,
    NotTerminalError,
    Tableau,
    TooLargeError,
    ZeroPivotError,
    oracle_solve,
    parse_mps_summary,
    solve_dense,
    solve_tableau,
)
from ._core import solve_mps_report as _solve_mps_report

__all__ = [
    "DEFAULT_TOLERANCE",
    "Error",
    "MpsError",
    "NotTerminalError",
    "Tableau",
    "TooLargeError",
    "ZeroPivotError",
    "oracle_solve",
    "parse_mps_summary",
    "solve_dense",
    "solve_mps",
    "solve_tableau",
]


def solve_mps(path, max_iterations=None, tol=DEFAULT_TOLERANCE, strategy_order=""):
    """Solve an MPS file and return the JSON report as a dict."""
    return json.loads(_solve_mps_report(os.fspath(path), max_iterations, tol, strategy_order))
