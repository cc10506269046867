"""Exact replay of the numerical steps in the 2K very-ampleness argument."""

from fractions import Fraction
import pkgutil

__path__ = pkgutil.extend_path(__path__, __name__)

from ._core import (  # noqa: E402
    UnknownCheck,
    UnknownScope,
    check_ids,
    enumerate_destabilizations,
    explain,
    hj_expand,
    registry,
    report_json,
    riemann_hurwitz_solutions,
    run_check,
    run_report,
    scopes,
)
from . import _core  # noqa: E402

__all__ = [
    "UnknownCheck",
    "UnknownScope",
    "check_ids",
    "discrepancies",
    "enumerate_destabilizations",
    "explain",
    "hj_expand",
    "registry",
    "report_json",
    "riemann_hurwitz_solutions",
    "run_check",
    "run_report",
    "scopes",
]


def discrepancies(n, q, reversed=False):
    return [Fraction(x) for x in _core.discrepancies(n, q, reversed)]
