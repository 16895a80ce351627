"""LP rounding and binary search: the (2 - gamma)-approximation.

Given a feasible fractional assignment at threshold ``T``, rounding proceeds
in four phases, each preserving eligibility intervals:

1. *huge jobs*: sweep machines left to right, tracking the cumulative
   fractional huge mass; whenever its floor increases, the least flexible
   (smallest ``last``, then id) still-unplaced huge job eligible there is
   placed on the triggering machine.
2. *regions*: machines where the cumulative fractional large mass crosses an
   integer are borders; together with the leftmost machine carrying large
   mass they span contiguous regions.  A disambiguation sweep decides which
   region keeps each border so that every region contains a *candidate* --
   a machine with positive large+huge mass and no rounded huge job.
3. *large jobs*: per region, twice: the least flexible large job eligible on
   a free candidate is placed on the leftmost such candidate, consuming it.
4. *small jobs*: sweep machines; greedily stack the least flexible eligible
   small job while it fits under ``(2 - gamma) T``; the first non-fitting
   least-flexible job advances the sweep (no search for a smaller fit).

The lemma-style guarantees behind the phases are re-checked after every
rounding (see :func:`check_invariants`); a structural failure (job unplaced,
cap exceeded) raises :class:`~intervalsched.core.InvariantViolation`.

``solve`` binary-searches the smallest LP-feasible threshold between the
list-scheduling lower bound and the total size, then rounds there.  The
result is at most ``OPT`` (any threshold at least ``OPT`` is LP-feasible, so
no integer below the result can be optimal), hence the rounded schedule's
makespan is at most ``(2 - gamma) * OPT``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .core import InvariantViolation, RaiInstance, validate
from .lff import lower_bound
from .lp import FractionalAssignment, Params, solve_feasibility
from .rationals import RAT, format_rational, rceil, rfloor


@dataclass(frozen=True, slots=True)
class Regions:
    points: tuple[int, ...]  # [i_0, borders...]; may repeat at the front
    spans: tuple[tuple[int, int], ...]  # inclusive (lo, hi) per region
    candidates: tuple[int, ...]  # machines with big mass and no rounded huge job


@dataclass(frozen=True, slots=True)
class LemmaCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True, slots=True)
class RoundingResult:
    schedule: dict[int, int]
    huge_on: dict[int, int]  # job -> machine
    large_on: dict[int, int]
    triggers: tuple[int, ...]
    regions: Regions
    cap: int  # floor((2 - gamma) T): every rounded load stays below this
    makespan: int
    checks: tuple[LemmaCheck, ...]


def _class_masses(inst: RaiInstance, fa: FractionalAssignment) -> tuple[list, list, list]:
    huge = [RAT(0)] * inst.machines
    large = [RAT(0)] * inst.machines
    for (i, j), v in fa.x.items():
        cls = fa.classes[j]
        if cls == "huge":
            huge[i] += v
        elif cls == "large":
            large[i] += v
    big = [huge[i] + large[i] for i in range(inst.machines)]
    return huge, large, big


def _least_flexible(inst: RaiInstance, jobs) -> int:
    return min(jobs, key=lambda j: (inst.jobs[j].last, j))


def place_huge(inst: RaiInstance, fa: FractionalAssignment) -> tuple[dict[int, int], tuple[int, ...]]:
    """Phase 1.  Returns the placement and the trigger machines."""
    huge_mass, _, _ = _class_masses(inst, fa)
    unplaced = {j for j in range(len(inst.jobs)) if fa.classes[j] == "huge"}
    placement: dict[int, int] = {}
    triggers: list[int] = []
    cum = RAT(0)
    prev_floor = 0
    for i in range(inst.machines):
        cum += huge_mass[i]
        if rfloor(cum) > prev_floor:
            triggers.append(i)
            eligible = [j for j in unplaced if inst.jobs[j].first <= i <= inst.jobs[j].last]
            if eligible:
                j = _least_flexible(inst, eligible)
                placement[j] = i
                unplaced.remove(j)
        prev_floor = rfloor(cum)
    if unplaced:
        raise InvariantViolation(f"huge jobs left unplaced: {sorted(unplaced)}")
    return placement, tuple(triggers)


def map_regions(
    inst: RaiInstance, fa: FractionalAssignment, huge_on: dict[int, int]
) -> Regions:
    """Phase 2.  Empty when the instance has no large fractional mass."""
    _, large_mass, big_mass = _class_masses(inst, fa)
    if all(v == 0 for v in large_mass):
        return Regions(points=(), spans=(), candidates=())

    borders: list[int] = []
    cum = RAT(0)
    prev_floor = 0
    for i in range(inst.machines):
        cum += large_mass[i]
        f = rfloor(cum)
        if f > prev_floor:
            borders.append(i)
        prev_floor = f
    anchor = next(i for i in range(inst.machines) if large_mass[i] > 0)
    points = [anchor] + borders  # deliberately without deduplication

    rounded_huge = set(huge_on.values())
    candidates = tuple(
        i for i in range(inst.machines) if big_mass[i] > 0 and i not in rounded_huge
    )
    cand_set = set(candidates)

    spans: list[tuple[int, int]] = []
    cur_left = points[0]
    q = len(borders)
    for s in range(q):
        right = points[s + 1]
        if s < q - 1 and any(c in cand_set for c in range(cur_left, right)):
            spans.append((cur_left, right - 1))
            cur_left = right
        elif s < q - 1:
            spans.append((cur_left, right))
            cur_left = right + 1
        else:
            spans.append((cur_left, right))
    return Regions(points=tuple(points), spans=tuple(spans), candidates=candidates)


def place_large(
    inst: RaiInstance,
    fa: FractionalAssignment,
    regions: Regions,
    huge_on: dict[int, int],
) -> dict[int, int]:
    """Phase 3: per region, twice, least flexible job to leftmost free candidate."""
    unplaced = {j for j in range(len(inst.jobs)) if fa.classes[j] == "large"}
    placement: dict[int, int] = {}
    consumed: set[int] = set()
    for lo, hi in regions.spans:
        region_cands = [c for c in regions.candidates if lo <= c <= hi]
        for _ in range(2):
            avail = [c for c in region_cands if c not in consumed]
            if not avail:
                break
            fitting = [
                j
                for j in unplaced
                if any(inst.jobs[j].first <= c <= inst.jobs[j].last for c in avail)
            ]
            if not fitting:
                break
            j = _least_flexible(inst, fitting)
            target = next(
                c for c in avail if inst.jobs[j].first <= c <= inst.jobs[j].last
            )
            placement[j] = target
            consumed.add(target)
            unplaced.remove(j)
    if unplaced:
        raise InvariantViolation(f"large jobs left unplaced: {sorted(unplaced)}")
    return placement


def place_small(
    inst: RaiInstance, fa: FractionalAssignment, loads: list[int]
) -> dict[int, int]:
    """Phase 4: stack least flexible small jobs up to the (2 - gamma) T cap."""
    cap = (RAT(2) - RAT(fa.params.gamma)) * RAT(fa.T)
    by_first: dict[int, list[int]] = {}
    total_small = 0
    for j in range(len(inst.jobs)):
        if fa.classes[j] == "small":
            by_first.setdefault(inst.jobs[j].first, []).append(j)
            total_small += 1
    placement: dict[int, int] = {}
    active: list[tuple[int, int]] = []
    for i in range(inst.machines):
        for j in by_first.get(i, ()):
            heapq.heappush(active, (inst.jobs[j].last, j))
        while active:
            last, j = active[0]
            if last < i:
                heapq.heappop(active)  # window passed; reported below
                continue
            if RAT(loads[i] + inst.jobs[j].size) > cap:
                break  # the least flexible job decides; no smaller-fit search
            heapq.heappop(active)
            placement[j] = i
            loads[i] += inst.jobs[j].size
    if len(placement) != total_small:
        missing = sorted(
            j
            for j in range(len(inst.jobs))
            if fa.classes[j] == "small" and j not in placement
        )
        raise InvariantViolation(f"small jobs left unplaced: {missing}")
    return placement


def round_fractional(inst: RaiInstance, fa: FractionalAssignment) -> RoundingResult:
    """Compose the four phases and verify every guarantee they rely on."""
    huge_on, triggers = place_huge(inst, fa)
    regions = map_regions(inst, fa, huge_on)
    large_on = place_large(inst, fa, regions, huge_on)

    loads = [0] * inst.machines
    for j, i in huge_on.items():
        loads[i] += inst.jobs[j].size
    for j, i in large_on.items():
        loads[i] += inst.jobs[j].size
    small_on = place_small(inst, fa, loads)

    schedule = {**huge_on, **large_on, **small_on}
    cap = rfloor((RAT(2) - RAT(fa.params.gamma)) * RAT(fa.T))
    report = validate(inst, schedule, cap, mode="atmost")
    if not report.ok:
        raise InvariantViolation(
            "rounded schedule failed validation: " + "; ".join(report.violations)
        )
    checks = check_invariants(inst, fa, huge_on, large_on, regions, tuple(loads), cap)
    return RoundingResult(
        schedule=schedule,
        huge_on=huge_on,
        large_on=large_on,
        triggers=triggers,
        regions=regions,
        cap=cap,
        makespan=report.makespan,
        checks=checks,
    )


def check_invariants(
    inst: RaiInstance,
    fa: FractionalAssignment,
    huge_on: dict[int, int],
    large_on: dict[int, int],
    regions: Regions,
    loads: tuple[int, ...],
    cap: int,
) -> tuple[LemmaCheck, ...]:
    """Re-check the rounding guarantees on a finished run."""
    m = inst.machines
    huge_mass, large_mass, big_mass = _class_masses(inst, fa)

    fh = [RAT(0)] * (m + 1)  # fractional prefix sums
    fl = [RAT(0)] * (m + 1)
    ch = [0] * (m + 1)  # rounded-count prefix sums
    cl = [0] * (m + 1)
    huge_count = [0] * m
    large_count = [0] * m
    for j, i in huge_on.items():
        huge_count[i] += 1
    for j, i in large_on.items():
        large_count[i] += 1
    for i in range(m):
        fh[i + 1] = fh[i] + huge_mass[i]
        fl[i + 1] = fl[i] + large_mass[i]
        ch[i + 1] = ch[i] + huge_count[i]
        cl[i + 1] = cl[i] + large_count[i]

    checks: list[LemmaCheck] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        checks.append(LemmaCheck(name=name, ok=ok, detail="" if ok else detail))

    bad = next(
        (
            (lo, hi)
            for lo in range(m)
            for hi in range(lo, m)
            if ch[hi + 1] - ch[lo] > rceil(fh[hi + 1] - fh[lo])
        ),
        None,
    )
    add(
        "huge_interval_bound",
        bad is None,
        f"interval {bad}: rounded huge count exceeds ceil(fractional mass)" if bad else "",
    )

    bad = next(
        (
            (lo, hi)
            for lo in range(m)
            for hi in range(lo, m)
            if RAT(cl[hi + 1] - cl[lo]) >= 2 * (fl[hi + 1] - fl[lo] + 2)
        ),
        None,
    )
    add(
        "large_interval_bound",
        bad is None,
        f"interval {bad}: rounded large count reaches 2*(fractional mass + 2)" if bad else "",
    )

    cand_set = set(regions.candidates)
    disjoint = all(
        regions.spans[s][1] < regions.spans[s + 1][0] for s in range(len(regions.spans) - 1)
    )
    nonempty = all(lo <= hi for lo, hi in regions.spans)
    has_candidate = all(
        any(c in cand_set for c in range(lo, hi + 1)) for lo, hi in regions.spans
    )
    add(
        "region_candidates",
        disjoint and nonempty and has_candidate,
        f"regions {regions.spans} not disjoint/nonempty or lacking candidates",
    )

    offender = None
    for i in range(m):
        big_count = huge_count[i] + large_count[i]
        if big_count > 1 or (big_count == 1 and big_mass[i] == 0):
            offender = i
            break
    add(
        "one_big_job_per_machine",
        offender is None,
        f"machine {offender}: extra big job or no fractional big mass" if offender is not None else "",
    )

    over = next((i for i in range(m) if RAT(loads[i]) > RAT(cap)), None)
    add(
        "small_cap",
        over is None,
        f"machine {over}: load {loads[over] if over is not None else 0} over cap {cap}",
    )

    region_of = {}
    for s, (lo, hi) in enumerate(regions.spans):
        for i in range(lo, hi + 1):
            region_of[i] = s
    bad_window = None
    for lo in sorted(region_of):
        for hi in sorted(region_of):
            if hi < lo:
                continue
            k = region_of[hi] - region_of[lo] + 1
            mass = fl[hi + 1] - fl[lo]
            if not (RAT(k - 2) < mass < RAT(k + 2)):
                bad_window = (lo, hi, k, format_rational(mass))
                break
        if bad_window:
            break
    add(
        "frac_large_window",
        bad_window is None,
        f"interval/regions {bad_window}: fractional large mass outside (k-2, k+2)" if bad_window else "",
    )
    return tuple(checks)


@dataclass(frozen=True, slots=True)
class SolveResult:
    t_star: int
    fractional: FractionalAssignment
    rounding: RoundingResult
    probes: tuple[tuple[int, bool], ...]  # binary-search transcript


def solve(inst: RaiInstance, params: Params | None = None) -> SolveResult:
    """Smallest LP-feasible threshold + rounded schedule.

    Searches ``[max(ceil(list-scheduling bound)), sum of sizes]``; the lower
    end is a valid makespan bound and the upper end is always feasible, so
    the returned ``t_star`` never exceeds the optimum.
    """
    params = params or Params()
    probes: list[tuple[int, bool]] = []
    if not inst.jobs:
        fa = FractionalAssignment(T=RAT(0), params=params, x={}, classes=())
        rounding = round_fractional(inst, fa)
        return SolveResult(t_star=0, fractional=fa, rounding=rounding, probes=())

    lo = rceil(lower_bound(inst).value)
    hi = sum(j.size for j in inst.jobs)
    while lo < hi:
        mid = (lo + hi) // 2
        fa = solve_feasibility(inst, mid, params)
        probes.append((mid, fa is not None))
        if fa is not None:
            hi = mid
        else:
            lo = mid + 1
    fa = solve_feasibility(inst, lo, params)
    probes.append((lo, fa is not None))
    if fa is None:
        raise InvariantViolation(
            f"binary search landed on an infeasible threshold {lo}"
        )
    rounding = round_fractional(inst, fa)
    return SolveResult(t_star=lo, fractional=fa, rounding=rounding, probes=tuple(probes))
