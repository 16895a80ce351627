"""Satisfiability gadgets: clause formulas, occurrence bookkeeping, and the
reductions that turn formulas into scheduling instances."""

from .formula import Clause, Formula, evaluate, format_formula, kappa, parse_formula, random_formula
from .bubble import BubbleTrace, bubble_trace
from .gadgets import (
    GadgetInstance,
    assignment_from_schedule,
    reduce_lrs3_ra,
    reduce_rai,
    reduce_rar2,
    reduce_rar3,
    reduce_simple,
    schedule_from_assignment,
)
from .lrs3 import (
    Lrs3Check,
    Lrs3Numeric,
    TrichotomyReport,
    lrs3_classify,
    lrs3_processing_time,
    trichotomy_report,
)

__all__ = [
    "Clause",
    "Formula",
    "evaluate",
    "format_formula",
    "kappa",
    "parse_formula",
    "random_formula",
    "BubbleTrace",
    "bubble_trace",
    "GadgetInstance",
    "assignment_from_schedule",
    "schedule_from_assignment",
    "reduce_simple",
    "reduce_rar3",
    "reduce_rar2",
    "reduce_rai",
    "reduce_lrs3_ra",
    "Lrs3Numeric",
    "Lrs3Check",
    "TrichotomyReport",
    "lrs3_classify",
    "lrs3_processing_time",
    "trichotomy_report",
]
