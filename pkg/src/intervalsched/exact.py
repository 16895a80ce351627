"""Exact oracles: optimal makespan, optimal minimum load, and exact-T
schedules, via budgeted branch and bound.

These are reference solvers for small instances.  They are deliberately
independent of the LP/rounding pipeline so their answers can be used to judge
it.  Every search is deterministic (jobs and machines are always visited in a
fixed order) and reports a tri-state status: a proved answer, or ``unknown``
when the node or time budget ran out.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Literal, Sequence

from .core import Instance


@dataclass(frozen=True, slots=True)
class SearchBudget:
    node_limit: int | None = 2_000_000
    time_limit: float | None = None  # seconds


class _Tracker:
    __slots__ = ("nodes", "node_limit", "deadline", "exhausted")

    def __init__(self, budget: SearchBudget):
        self.nodes = 0
        self.node_limit = budget.node_limit
        self.deadline = (
            time.monotonic() + budget.time_limit if budget.time_limit is not None else None
        )
        self.exhausted = False

    def tick(self) -> bool:
        """Count a node; True while within budget."""
        if self.exhausted:
            return False
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            self.exhausted = True
        elif self.deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self.deadline:
                self.exhausted = True
        return not self.exhausted


@dataclass(frozen=True, slots=True)
class OptResult:
    status: Literal["optimal", "unknown"]
    value: int | None
    schedule: dict[int, int] | None
    nodes: int


def _eligibility(inst: Instance) -> list[tuple[int, ...]]:
    return [tuple(inst.eligible_machines(j.id)) for j in inst.jobs]


def _greedy(inst: Instance, order: Sequence[int], elig: list[tuple[int, ...]]) -> dict[int, int]:
    """Place jobs in the given order, each on the eligible machine whose load
    stays smallest (ties: lowest index)."""
    loads = [0] * inst.machines
    schedule: dict[int, int] = {}
    for j in order:
        best = min(elig[j], key=lambda i: (loads[i], i))
        schedule[j] = best
        loads[best] += inst.jobs[j].size
    return schedule


def optimal_makespan(inst: Instance, budget: SearchBudget | None = None) -> OptResult:
    budget = budget or SearchBudget()
    if not inst.jobs:
        return OptResult(status="optimal", value=0, schedule={}, nodes=0)
    elig = _eligibility(inst)
    order = sorted(range(len(inst.jobs)), key=lambda j: (-inst.jobs[j].size, j))
    sizes = [inst.jobs[j].size for j in range(len(inst.jobs))]

    incumbent = _greedy(inst, order, elig)
    loads0 = [0] * inst.machines
    for j, i in incumbent.items():
        loads0[i] += sizes[j]
    best_value = max(loads0)
    best_schedule = dict(incumbent)

    tracker = _Tracker(budget)
    loads = [0] * inst.machines
    assignment: dict[int, int] = {}
    total = sum(sizes)

    def lower(frontier: int) -> int:
        lb = max(loads) if assignment else 0
        lb = max(lb, -(-total // inst.machines))
        for pos in range(frontier, len(order)):
            j = order[pos]
            lb = max(lb, min(loads[i] for i in elig[j]) + sizes[j])
        return lb

    def dfs(pos: int) -> None:
        nonlocal best_value, best_schedule
        if tracker.exhausted:
            return
        if pos == len(order):
            value = max(loads)
            if value < best_value:
                best_value = value
                best_schedule = dict(assignment)
            return
        if lower(pos) >= best_value:
            return
        j = order[pos]
        for i in sorted(elig[j], key=lambda i: (loads[i], i)):
            if loads[i] + sizes[j] >= best_value:
                continue
            if not tracker.tick():
                return
            loads[i] += sizes[j]
            assignment[j] = i
            dfs(pos + 1)
            del assignment[j]
            loads[i] -= sizes[j]

    dfs(0)
    if tracker.exhausted:
        return OptResult(status="unknown", value=None, schedule=None, nodes=tracker.nodes)
    return OptResult(status="optimal", value=best_value, schedule=best_schedule, nodes=tracker.nodes)


def optimal_min_load(inst: Instance, budget: SearchBudget | None = None) -> OptResult:
    """Maximize the minimum machine load."""
    budget = budget or SearchBudget()
    if not inst.jobs:
        return OptResult(status="optimal", value=0, schedule={}, nodes=0)
    elig = _eligibility(inst)
    order = sorted(range(len(inst.jobs)), key=lambda j: (-inst.jobs[j].size, j))
    sizes = [inst.jobs[j].size for j in range(len(inst.jobs))]

    incumbent = _greedy(inst, order, elig)
    loads0 = [0] * inst.machines
    for j, i in incumbent.items():
        loads0[i] += sizes[j]
    best_value = min(loads0)
    best_schedule = dict(incumbent)

    tracker = _Tracker(budget)
    loads = [0] * inst.machines
    assignment: dict[int, int] = {}

    def dfs(pos: int) -> None:
        nonlocal best_value, best_schedule
        if tracker.exhausted:
            return
        if pos == len(order):
            value = min(loads)
            if value > best_value:
                best_value = value
                best_schedule = dict(assignment)
            return
        # potential final min load: every machine can at best gain all its
        # still-unassigned eligible jobs
        potential = [loads[i] for i in range(inst.machines)]
        for p in range(pos, len(order)):
            j = order[p]
            for i in elig[j]:
                potential[i] += sizes[j]
        if min(potential) <= best_value:
            return
        j = order[pos]
        for i in sorted(elig[j], key=lambda i: (loads[i], i)):
            if not tracker.tick():
                return
            loads[i] += sizes[j]
            assignment[j] = i
            dfs(pos + 1)
            del assignment[j]
            loads[i] -= sizes[j]

    dfs(0)
    if tracker.exhausted:
        return OptResult(status="unknown", value=None, schedule=None, nodes=tracker.nodes)
    return OptResult(status="optimal", value=best_value, schedule=best_schedule, nodes=tracker.nodes)


@dataclass(frozen=True, slots=True)
class ExistsResult:
    status: Literal["found", "absent", "unknown"]
    schedule: dict[int, int] | None
    nodes: int


def exists_exact_T_schedule(
    inst: Instance, T: int, budget: SearchBudget | None = None
) -> ExistsResult:
    """Search for a schedule loading every machine to exactly ``T``.

    Constraint propagation: a job with no machine whose remaining capacity
    fits it fails the node; a job with exactly one is forced there; a machine
    whose remaining capacity cannot be written as a subset sum of its
    eligible unassigned job sizes fails the node.
    """
    budget = budget or SearchBudget()
    n = len(inst.jobs)
    sizes = [inst.jobs[j].size for j in range(n)]
    if sum(sizes) != T * inst.machines:
        return ExistsResult(status="absent", schedule=None, nodes=0)
    if any(p > T for p in sizes):
        return ExistsResult(status="absent", schedule=None, nodes=0)
    if n == 0:
        # total mass 0 == T*m forces T == 0; trivially exact
        return ExistsResult(status="found", schedule={}, nodes=0)

    elig = _eligibility(inst)
    eligible_jobs: list[list[int]] = [[] for _ in range(inst.machines)]
    for j in range(n):
        for i in elig[j]:
            eligible_jobs[i].append(j)

    residual = [T] * inst.machines
    assigned: dict[int, int] = {}
    tracker = _Tracker(budget)

    def fits(j: int) -> list[int]:
        return [i for i in elig[j] if residual[i] >= sizes[j]]

    def machine_ok(i: int) -> bool:
        r = residual[i]
        if r == 0:
            return True
        mask = 1
        limit = (1 << (r + 1)) - 1
        for j in eligible_jobs[i]:
            if j not in assigned and sizes[j] <= r:
                mask |= mask << sizes[j]
                mask &= limit
        return bool(mask >> r & 1)

    def assign(j: int, i: int, trail: list[int]) -> bool:
        assigned[j] = i
        residual[i] -= sizes[j]
        trail.append(j)
        return residual[i] >= 0

    def undo(trail: list[int]) -> None:
        for j in reversed(trail):
            i = assigned.pop(j)
            residual[i] += sizes[j]

    def propagate(trail: list[int]) -> bool:
        while True:
            forced: tuple[int, int] | None = None
            for j in range(n):
                if j in assigned:
                    continue
                options = fits(j)
                if not options:
                    return False
                if len(options) == 1:
                    forced = (j, options[0])
                    break
            if forced is None:
                break
            if not assign(forced[0], forced[1], trail):
                return False
        return all(machine_ok(i) for i in range(inst.machines))

    def dfs() -> bool | None:
        """True = schedule found, False = subtree exhausted, None = budget."""
        trail: list[int] = []
        if not propagate(trail):
            undo(trail)
            return False
        if len(assigned) == n:
            return True
        pending = [j for j in range(n) if j not in assigned]
        j = min(pending, key=lambda j: (len(fits(j)), j))
        for i in fits(j):
            if not tracker.tick():
                undo(trail)
                return None
            sub_trail: list[int] = []
            assign(j, i, sub_trail)
            result = dfs()
            if result:
                return True
            if result is None:
                undo(sub_trail)
                undo(trail)
                return None
            undo(sub_trail)
        undo(trail)
        return False

    outcome = dfs()
    if outcome:
        return ExistsResult(status="found", schedule=dict(assigned), nodes=tracker.nodes)
    if outcome is None:
        return ExistsResult(status="unknown", schedule=None, nodes=tracker.nodes)
    return ExistsResult(status="absent", schedule=None, nodes=tracker.nodes)


def sat_brute_force(formula) -> tuple[bool, ...] | None:
    """First satisfying assignment of a clause formula by ascending bitmask
    (bit ``j`` is variable ``j``), or ``None``.  Guarded to 24 variables."""
    n = formula.num_vars
    if n > 24:
        raise ValueError(f"brute force capped at 24 variables, formula has {n}")
    from .reductions.formula import evaluate

    for mask in range(1 << n):
        assignment = tuple(bool(mask >> j & 1) for j in range(n))
        if evaluate(formula, assignment):
            return assignment
    return None
