"""Makespan minimization under interval machine restrictions.

Exact-rational LP rounding with a ``(2 - gamma)`` guarantee, a
least-flexible-first 2-approximation, exact branch-and-bound oracles for
small instances, and satisfiability gadget generators.
"""

from .approx import RoundingResult, SolveResult, round_fractional, solve
from .core import (
    InvariantViolation,
    RaiInstance,
    RaiJob,
    ResourceInstance,
    ResourceJob,
    RestrictedInstance,
    RestrictedJob,
    ValidationReport,
    as_interval,
    loads,
    makespan,
    rai_to_restricted,
    resource_to_restricted,
    validate,
)
from .exact import (
    ExistsResult,
    OptResult,
    SearchBudget,
    exists_exact_T_schedule,
    optimal_makespan,
    optimal_min_load,
    sat_brute_force,
)
from .lff import LffResult, lff_schedule, lower_bound
from .lp import FractionalAssignment, Params, build_lp, check_fractional, classify, solve_feasibility, ub
from .rationals import BACKEND_NAME, RAT, format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BACKEND_NAME",
    "RAT",
    "format_rational",
    "parse_rational",
    "InvariantViolation",
    "RaiJob",
    "RaiInstance",
    "RestrictedJob",
    "RestrictedInstance",
    "ResourceJob",
    "ResourceInstance",
    "ValidationReport",
    "as_interval",
    "rai_to_restricted",
    "resource_to_restricted",
    "loads",
    "makespan",
    "validate",
    "Params",
    "FractionalAssignment",
    "classify",
    "ub",
    "build_lp",
    "solve_feasibility",
    "check_fractional",
    "LffResult",
    "lower_bound",
    "lff_schedule",
    "SearchBudget",
    "OptResult",
    "ExistsResult",
    "optimal_makespan",
    "optimal_min_load",
    "exists_exact_T_schedule",
    "sat_brute_force",
    "RoundingResult",
    "SolveResult",
    "round_fractional",
    "solve",
]
