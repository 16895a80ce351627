"""Least-flexible-first list scheduling for interval restrictions.

The lower bound

    L = max( max_j p_j,  max_{l <= r} p(J(l, r)) / (r - l + 1) )

(with ``J(l, r)`` the jobs confined to machines ``l..r``) is a valid bound on
the optimal makespan.  Sweeping machines left to right and greedily stacking
the least flexible eligible job (smallest ``last``, ties by id) while the
current load is still at most ``L`` places every job and never exceeds
``L + max_j p_j`` on any machine, i.e. the sweep is a 2-approximation.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .core import InvariantViolation, RaiInstance, RaiJob
from .rationals import RAT, Rational


@dataclass(frozen=True, slots=True)
class LowerBound:
    value: Rational
    kind: str  # "job" | "interval" | "empty"
    job: int | None = None
    lo: int | None = None
    hi: int | None = None


def _confined_loads(inst: RaiInstance) -> list[list[int]]:
    """``out[l][r]`` = total size of jobs whose interval lies inside [l, r]."""
    m = inst.machines
    point = [[0] * m for _ in range(m)]
    for job in inst.jobs:
        point[job.first][job.last] += job.size
    out = [[0] * m for _ in range(m)]
    for lo in range(m - 1, -1, -1):
        row_cum = 0
        for hi in range(lo, m):
            row_cum += point[lo][hi]
            out[lo][hi] = row_cum + (out[lo + 1][hi] if lo + 1 < m else 0)
    return out


def lower_bound(inst: RaiInstance) -> LowerBound:
    """Exact rational L with a witness for which bound is tight.

    The witness prefers a maximum-size job (smallest id); an interval is
    reported only when its average load strictly exceeds every job size.
    """
    if not inst.jobs:
        return LowerBound(value=RAT(0), kind="empty")
    best_job = max(inst.jobs, key=lambda j: (j.size, -j.id))
    best = LowerBound(value=RAT(best_job.size), kind="job", job=best_job.id)
    table = _confined_loads(inst)
    for lo in range(inst.machines):
        for hi in range(lo, inst.machines):
            avg = RAT(table[lo][hi]) / (hi - lo + 1)
            if avg > best.value:
                best = LowerBound(value=avg, kind="interval", lo=lo, hi=hi)
    return best


@dataclass(frozen=True, slots=True)
class LffResult:
    schedule: dict[int, int]
    bound: LowerBound
    loads: tuple[int, ...]
    makespan: int


def lff_schedule(inst: RaiInstance) -> LffResult:
    """Run the sweep; raises :class:`InvariantViolation` if a job is left over
    (the placement lemma guarantees this never happens)."""
    bound = lower_bound(inst)
    L = RAT(bound.value)

    by_first: dict[int, list[RaiJob]] = {}
    for job in inst.jobs:
        by_first.setdefault(job.first, []).append(job)

    loads = [0] * inst.machines
    schedule: dict[int, int] = {}
    active: list[tuple[int, int]] = []  # (last, id) heap of currently started jobs
    for i in range(inst.machines):
        for job in by_first.get(i, ()):
            heapq.heappush(active, (job.last, job.id))
        while active:
            last, job_id = active[0]
            if last < i:
                heapq.heappop(active)  # window passed unplaced; reported below
                continue
            if RAT(loads[i]) > L:
                break
            heapq.heappop(active)
            schedule[job_id] = i
            loads[i] += inst.jobs[job_id].size

    if len(schedule) != len(inst.jobs):
        missing = sorted(set(range(len(inst.jobs))) - set(schedule))
        raise InvariantViolation(f"least-flexible-first left jobs unplaced: {missing}")

    return LffResult(
        schedule=schedule,
        bound=bound,
        loads=tuple(loads),
        makespan=max(loads) if loads else 0,
    )
