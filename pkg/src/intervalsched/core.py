"""Instance data model, conversions, and schedule validation.

Three instance flavours share the same job-id conventions (ids are dense,
0-based, and equal to the job's position in the tuple; machine indices run
0..m-1):

* :class:`RaiInstance` -- interval restrictions: job ``j`` may run exactly on
  the contiguous machine range ``first(j)..last(j)``.
* :class:`RestrictedInstance` -- arbitrary eligibility sets.
* :class:`ResourceInstance` -- eligibility induced by resource demands: job
  ``j`` fits machine ``i`` iff its demand vector is componentwise at most the
  machine's capacity vector.

A schedule is a plain ``{job_id: machine_index}`` mapping.  Validation never
raises on a bad schedule -- violations are report entries -- while malformed
*instances* fail fast at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Mapping, Sequence

from .rationals import RAT, Rational


class InvariantViolation(Exception):
    """An internal guarantee of the algorithms failed; indicates a bug."""


# ---------------------------------------------------------------------------
# instances


@dataclass(frozen=True, slots=True)
class RaiJob:
    id: int
    size: int
    first: int
    last: int


@dataclass(frozen=True, slots=True)
class RestrictedJob:
    id: int
    size: int
    eligible: tuple[int, ...]  # sorted, duplicate-free


@dataclass(frozen=True, slots=True)
class ResourceJob:
    id: int
    size: int
    demand: tuple[int, ...]


def _check_ids(jobs: Sequence) -> None:
    for pos, job in enumerate(jobs):
        if job.id != pos:
            raise ValueError(f"job ids must be dense 0..n-1: position {pos} has id {job.id}")
        if job.size < 1:
            raise ValueError(f"job {job.id}: size must be a positive integer, got {job.size}")


@dataclass(frozen=True, slots=True)
class RaiInstance:
    machines: int
    jobs: tuple[RaiJob, ...]

    def __post_init__(self) -> None:
        if self.machines < 1:
            raise ValueError("need at least one machine")
        _check_ids(self.jobs)
        for job in self.jobs:
            if not (0 <= job.first <= job.last < self.machines):
                raise ValueError(
                    f"job {job.id}: interval [{job.first}, {job.last}] not within 0..{self.machines - 1}"
                )

    def eligible_machines(self, job_id: int) -> range:
        job = self.jobs[job_id]
        return range(job.first, job.last + 1)


@dataclass(frozen=True, slots=True)
class RestrictedInstance:
    machines: int
    jobs: tuple[RestrictedJob, ...]

    def __post_init__(self) -> None:
        if self.machines < 1:
            raise ValueError("need at least one machine")
        _check_ids(self.jobs)
        for job in self.jobs:
            if not job.eligible:
                raise ValueError(f"job {job.id}: eligible on no machine")
            if list(job.eligible) != sorted(set(job.eligible)):
                raise ValueError(f"job {job.id}: eligible set must be sorted and duplicate-free")
            if job.eligible[0] < 0 or job.eligible[-1] >= self.machines:
                raise ValueError(f"job {job.id}: eligible machines out of range")

    def eligible_machines(self, job_id: int) -> tuple[int, ...]:
        return self.jobs[job_id].eligible


@dataclass(frozen=True, slots=True)
class ResourceInstance:
    resources: int
    machines: tuple[tuple[int, ...], ...]  # capacity vector per machine
    jobs: tuple[ResourceJob, ...]

    def __post_init__(self) -> None:
        if len(self.machines) < 1:
            raise ValueError("need at least one machine")
        if self.resources < 1:
            raise ValueError("need at least one resource dimension")
        _check_ids(self.jobs)
        for i, caps in enumerate(self.machines):
            if len(caps) != self.resources:
                raise ValueError(f"machine {i}: expected {self.resources} capacities, got {len(caps)}")
            if any(c < 0 for c in caps):
                raise ValueError(f"machine {i}: negative capacity")
        for job in self.jobs:
            if len(job.demand) != self.resources:
                raise ValueError(f"job {job.id}: expected {self.resources} demands, got {len(job.demand)}")
            if any(d < 0 for d in job.demand):
                raise ValueError(f"job {job.id}: negative demand")


Instance = RaiInstance | RestrictedInstance


# ---------------------------------------------------------------------------
# conversions


def resource_to_restricted(inst: ResourceInstance) -> RestrictedInstance:
    """Materialize resource-induced eligibility sets.

    Raises ``ValueError`` naming the first job whose demand fits no machine.
    """
    jobs = []
    for job in inst.jobs:
        eligible = tuple(
            i
            for i, caps in enumerate(inst.machines)
            if all(d <= c for d, c in zip(job.demand, caps))
        )
        if not eligible:
            raise ValueError(f"job {job.id}: demand {job.demand} fits no machine")
        jobs.append(RestrictedJob(id=job.id, size=job.size, eligible=eligible))
    return RestrictedInstance(machines=len(inst.machines), jobs=tuple(jobs))


def rai_to_restricted(inst: RaiInstance) -> RestrictedInstance:
    jobs = tuple(
        RestrictedJob(id=j.id, size=j.size, eligible=tuple(range(j.first, j.last + 1)))
        for j in inst.jobs
    )
    return RestrictedInstance(machines=inst.machines, jobs=jobs)


def as_interval(inst: RestrictedInstance) -> RaiInstance | None:
    """Reinterpret as an interval instance, or ``None`` if any set has gaps."""
    jobs = []
    for job in inst.jobs:
        first, last = job.eligible[0], job.eligible[-1]
        if len(job.eligible) != last - first + 1:
            return None
        jobs.append(RaiJob(id=job.id, size=job.size, first=first, last=last))
    return RaiInstance(machines=inst.machines, jobs=tuple(jobs))


# ---------------------------------------------------------------------------
# loads and validation


def interval_load(inst: RaiInstance, lo: int, hi: int) -> int:
    """Total size of jobs whose whole eligibility interval lies in [lo, hi]."""
    return sum(j.size for j in inst.jobs if lo <= j.first and j.last <= hi)


def loads(inst: Instance, schedule: Mapping[int, int]) -> list[int]:
    """Per-machine load vector (jobs missing from the schedule contribute 0)."""
    out = [0] * inst.machines
    for job_id, machine in schedule.items():
        out[machine] += inst.jobs[job_id].size
    return out


def makespan(inst: Instance, schedule: Mapping[int, int]) -> int:
    return max(loads(inst, schedule))


def min_load(inst: Instance, schedule: Mapping[int, int]) -> int:
    return min(loads(inst, schedule))


Mode = Literal["atmost", "exact"]


@dataclass(frozen=True, slots=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]
    loads: tuple[int, ...]
    makespan: int
    min_load: int


def validate(
    inst: Instance,
    schedule: Mapping[int, int],
    threshold: Rational,
    mode: Mode = "atmost",
) -> ValidationReport:
    """Check a schedule against an instance.

    ``atmost``: every job placed once on an eligible machine, every load at
    most ``threshold``.  ``exact``: additionally every machine load equals
    ``threshold`` exactly.  Violations are collected, not raised.
    """
    t = RAT(threshold)
    violations: list[str] = []
    seen = set()
    for job_id, machine in schedule.items():
        if not (0 <= job_id < len(inst.jobs)):
            violations.append(f"unknown job id {job_id}")
            continue
        seen.add(job_id)
        if not (0 <= machine < inst.machines):
            violations.append(f"job {job_id}: machine {machine} out of range")
        elif machine not in inst.eligible_machines(job_id):
            violations.append(f"job {job_id}: machine {machine} not eligible")
    for job in inst.jobs:
        if job.id not in seen:
            violations.append(f"job {job.id}: not scheduled")

    load_vec = loads(
        inst,
        {
            j: m
            for j, m in schedule.items()
            if 0 <= j < len(inst.jobs) and 0 <= m < inst.machines
        },
    )
    for i, load in enumerate(load_vec):
        if RAT(load) > t:
            violations.append(f"machine {i}: load {load} exceeds {threshold}")
        elif mode == "exact" and RAT(load) != t:
            violations.append(f"machine {i}: load {load} differs from exact target {threshold}")

    return ValidationReport(
        ok=not violations,
        violations=tuple(violations),
        loads=tuple(load_vec),
        makespan=max(load_vec),
        min_load=min(load_vec),
    )
