"""Extended assignment LP for interval-restricted makespan feasibility.

For a guess ``T`` of the makespan, jobs split into size classes

* small:  ``p <= T/2``
* large:  ``T/2 < p <= (1/2 + xi) T``
* huge:   ``p > (1/2 + xi) T``

and the LP over eligible pairs ``x[i, j] >= 0`` asks for

1. ``sum_i x[i, j] == 1``                                (each job assigned)
2. ``sum_j p_j x[i, j] <= T``                            (machine capacity)
3. ``x[i, j] == 0`` off eligibility                      (structural: no var)
4. ``sum_{j large or huge} x[i, j] <= 1``                (per machine)
5. ``sum_{i in [l, r]} sum_{j huge} x[i, j] <= UB(l, r)``  for every interval

with ``UB(l, r) = floor((T * |M(l,r)| - p(S(l,r))) / ((1/2 + xi) T))`` where
``S(l, r)`` are the small jobs confined to the interval.  ``UB`` may be
negative; such rows (even without any huge variable) are generated anyway --
a negative bound certifies that the small jobs confined to ``[l, r]`` alone
overrun the interval's capacity, so the LP is infeasible either way.

Every returned fractional assignment is re-checked against constraints
(1)-(5) by an independent evaluator that works from the instance directly
rather than from the generated rows; a discrepancy raises
:class:`~intervalsched.core.InvariantViolation`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .core import InvariantViolation, RaiInstance
from .rationals import RAT, Rational, format_rational, rfloor
from .simplex import Row, solve_feasibility_system

SizeClass = Literal["small", "large", "huge"]


@dataclass(frozen=True, slots=True)
class Params:
    """Rounding parameters.  Defaults give the (2 - 1/24) guarantee."""

    gamma: Rational = RAT(1) / 24
    xi: Rational = RAT(1) / 24

    def __post_init__(self) -> None:
        g, x = RAT(self.gamma), RAT(self.xi)
        checks = (
            ("gamma > 0", g > 0),
            ("xi > 0", x > 0),
            ("gamma <= xi", g <= x),
            ("gamma + xi <= 1/12", g + x <= RAT(1) / 12),
            ("8*xi + 7*gamma <= 3/4", 8 * x + 7 * g <= RAT(3) / 4),
        )
        for name, ok in checks:
            if not ok:
                raise ValueError(
                    f"parameter inequality {name} violated "
                    f"(gamma={format_rational(g)}, xi={format_rational(x)})"
                )


def classify(size: int, T: Rational, params: Params) -> SizeClass:
    t = RAT(T)
    p = RAT(size)
    if p <= t / 2:
        return "small"
    if p <= (RAT(1) / 2 + RAT(params.xi)) * t:
        return "large"
    return "huge"


def ub(T: Rational, machine_count: int, small_load: Rational, params: Params) -> int:
    """Interval bound on huge mass; may be negative."""
    t = RAT(T)
    if t <= 0:
        raise ValueError("ub requires T > 0")
    return rfloor((t * machine_count - RAT(small_load)) / ((RAT(1) / 2 + RAT(params.xi)) * t))


@dataclass(frozen=True, slots=True)
class LpModel:
    T: Rational
    params: Params
    var_index: dict[tuple[int, int], int]  # (machine, job) -> structural column
    rows: tuple[Row, ...]
    classes: tuple[SizeClass, ...]  # per job id


def build_lp(inst: RaiInstance, T: Rational, params: Params | None = None) -> LpModel:
    params = params or Params()
    t = RAT(T)
    if t < 1:
        raise ValueError("build_lp requires T >= 1")
    classes = tuple(classify(j.size, t, params) for j in inst.jobs)

    var_index: dict[tuple[int, int], int] = {}
    for job in inst.jobs:
        for i in range(job.first, job.last + 1):
            var_index[(i, job.id)] = len(var_index)

    rows: list[Row] = []
    # (1) assignment
    for job in inst.jobs:
        coeffs = {var_index[(i, job.id)]: RAT(1) for i in range(job.first, job.last + 1)}
        rows.append(Row(coeffs=coeffs, sense="eq", rhs=RAT(1)))
    # (2) capacity
    for i in range(inst.machines):
        coeffs = {
            var_index[(i, j.id)]: RAT(j.size)
            for j in inst.jobs
            if j.first <= i <= j.last
        }
        rows.append(Row(coeffs=coeffs, sense="le", rhs=t))
    # (4) at most one large-or-huge job's worth of mass per machine
    for i in range(inst.machines):
        coeffs = {
            var_index[(i, j.id)]: RAT(1)
            for j in inst.jobs
            if j.first <= i <= j.last and classes[j.id] != "small"
        }
        rows.append(Row(coeffs=coeffs, sense="le", rhs=RAT(1)))
    # (5) interval bounds on huge mass, for every interval
    small_conf = _confined_small_loads(inst, classes)
    for lo in range(inst.machines):
        for hi in range(lo, inst.machines):
            coeffs = {
                var_index[(i, j.id)]: RAT(1)
                for j in inst.jobs
                if classes[j.id] == "huge"
                for i in range(max(lo, j.first), min(hi, j.last) + 1)
            }
            bound = ub(t, hi - lo + 1, small_conf[lo][hi], params)
            rows.append(Row(coeffs=coeffs, sense="le", rhs=RAT(bound)))

    return LpModel(T=t, params=params, var_index=var_index, rows=tuple(rows), classes=classes)


def _confined_small_loads(inst: RaiInstance, classes: tuple[SizeClass, ...]) -> list[list[int]]:
    """``out[l][r]`` = total size of small jobs with interval inside [l, r]."""
    m = inst.machines
    point = [[0] * m for _ in range(m)]
    for job in inst.jobs:
        if classes[job.id] == "small":
            point[job.first][job.last] += job.size
    out = [[0] * m for _ in range(m)]
    for lo in range(m - 1, -1, -1):
        row_cum = 0
        for hi in range(lo, m):
            row_cum += point[lo][hi]
            out[lo][hi] = row_cum + (out[lo + 1][hi] if lo + 1 < m else 0)
    return out


@dataclass(frozen=True, slots=True)
class FractionalAssignment:
    """A feasible point of the extended LP at threshold ``T``."""

    T: Rational
    params: Params
    x: dict[tuple[int, int], Rational]  # sparse, eligible pairs only
    classes: tuple[SizeClass, ...]

    def machine_mass(self, i: int, kinds: tuple[SizeClass, ...]) -> Rational:
        total = RAT(0)
        for (mi, j), v in self.x.items():
            if mi == i and self.classes[j] in kinds:
                total += v
        return total


def solve_feasibility(
    inst: RaiInstance, T: Rational, params: Params | None = None
) -> FractionalAssignment | None:
    """Solve the extended LP; ``None`` when infeasible.

    Any returned assignment has been re-validated by the independent
    constraint evaluator.
    """
    params = params or Params()
    t = RAT(T)
    if not inst.jobs:
        return FractionalAssignment(T=t, params=params, x={}, classes=())
    if t < 1:
        return None  # positive integer sizes cannot fit a sub-unit threshold
    model = build_lp(inst, t, params)
    solution = solve_feasibility_system(len(model.var_index), list(model.rows))
    if solution is None:
        return None
    cols = {col: (i, j) for (i, j), col in model.var_index.items()}
    x = {cols[c]: v for c, v in solution.items()}
    fa = FractionalAssignment(T=t, params=params, x=x, classes=model.classes)
    problems = check_fractional(inst, fa)
    if problems:
        raise InvariantViolation(
            "simplex returned a point violating the LP constraints: " + "; ".join(problems)
        )
    return fa


def check_fractional(inst: RaiInstance, fa: FractionalAssignment) -> list[str]:
    """Independently evaluate constraints (1)-(5) on a fractional point.

    Works directly from the instance (classes and bounds are re-derived),
    so it does not share code with :func:`build_lp`.
    """
    t = RAT(fa.T)
    params = fa.params
    problems: list[str] = []

    for (i, j), v in fa.x.items():
        if v < 0:
            problems.append(f"x[{i},{j}] negative")
        job = inst.jobs[j]
        if not (job.first <= i <= job.last):
            problems.append(f"x[{i},{j}] positive outside eligibility interval")

    for job in inst.jobs:
        total = sum((v for (i, j), v in fa.x.items() if j == job.id), RAT(0))
        if total != 1:
            problems.append(f"job {job.id}: assigned mass {format_rational(total)} != 1")

    half_xi = RAT(1) / 2 + RAT(params.xi)
    for i in range(inst.machines):
        load = RAT(0)
        big = RAT(0)
        for (mi, j), v in fa.x.items():
            if mi != i:
                continue
            p = RAT(inst.jobs[j].size)
            load += p * v
            if p > t / 2:
                big += v
        if load > t:
            problems.append(f"machine {i}: fractional load {format_rational(load)} > T")
        if big > 1:
            problems.append(f"machine {i}: large+huge mass {format_rational(big)} > 1")

    huge_ids = [j.id for j in inst.jobs if RAT(j.size) > half_xi * t]
    for lo in range(inst.machines):
        for hi in range(lo, inst.machines):
            small_conf = sum(
                j.size
                for j in inst.jobs
                if RAT(j.size) <= t / 2 and lo <= j.first and j.last <= hi
            )
            bound = rfloor((t * (hi - lo + 1) - small_conf) / (half_xi * t))
            mass = sum(
                (v for (i, j), v in fa.x.items() if j in huge_ids and lo <= i <= hi),
                RAT(0),
            )
            if mass > bound:
                problems.append(
                    f"interval [{lo},{hi}]: huge mass {format_rational(mass)} > {bound}"
                )
    return problems
