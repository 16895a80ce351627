"""Numeric rank-3 realization of the sorting-block gadget.

Machine speeds and job sizes are rank-3 vectors whose entries are monomials
``coef * N^e`` in a large base ``N``; the processing time of job ``j`` on
machine ``i`` is the inner product ``p'_ij = sum_d s_d(j) * v_d(i)``.  With

* ``eps = delta / 2``  and  ``N = cap / eps``  (so ``eps * N == cap``),
* ``C = 16 n``  (the exponent stride separating sorting blocks),

every pair is claimed to satisfy a trichotomy: either the pair is *eligible*
in the unit-size gadget and ``p_j <= p'_ij <= p_j + delta``, or it is
*blocked* and ``p'_ij > cap``.  :func:`lrs3_classify` decides a pair exactly:
a single monomial with ``e >= 2``, or ``e == 1`` and ``coef > eps``, already
exceeds ``cap`` (all terms are positive), so distant blocks exit early;
otherwise the exact rational sum is formed.  :func:`lrs3_processing_time`
always evaluates fully, so the shortcut can be audited against it.

Defaults ``delta = 1/2``, ``cap = 8`` give ``N = 32``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import InvariantViolation
from ..rationals import RAT, Rational
from .formula import Formula
from .gadgets import Desc, GadgetInstance, reduce_lrs3_ra

Term = tuple[Rational, int]  # (coefficient, exponent of N)


class Lrs3Numeric:
    """Numeric view of the sorting-block gadget for one formula."""

    def __init__(self, formula: Formula, delta: Rational = None, cap: Rational = None):
        self.delta = RAT(delta) if delta is not None else RAT(1) / 2
        self.cap = RAT(cap) if cap is not None else RAT(8)
        if not 0 < self.delta <= 1:
            raise ValueError("delta must lie in (0, 1]")
        if self.cap < 1:
            raise ValueError("cap must be at least 1")
        self.eps = self.delta / 2
        self.N = self.cap / self.eps
        self.big_c = 16 * formula.num_vars
        self.formula = formula
        self.gadget: GadgetInstance = reduce_lrs3_ra(formula)
        self.trace = self.gadget.trace
        self._pow: dict[int, Rational] = {}
        self._blocks = self._assign_blocks()

    # -- block bookkeeping ---------------------------------------------------

    def _assign_blocks(self) -> list[int]:
        out = []
        for desc in self.gadget.machine_descs:
            if desc[0] == "tmach":
                out.append(0)
            elif desc[0] in ("smach", "amach"):
                ell, q = desc[1], desc[2]
                out.append(1 + 3 * ell + q)
            else:  # cmach
                out.append(1 + 3 * self.trace.k)
        return out

    @property
    def num_blocks(self) -> int:
        return 3 * self.trace.k + 2

    def machine_block(self, machine: int) -> int:
        return self._blocks[machine]

    # -- monomials -----------------------------------------------------------

    def _npow(self, e: int) -> Rational:
        value = self._pow.get(e)
        if value is None:
            value = self.N**e
            self._pow[e] = value
        return value

    def speed_exponents(self, machine: int) -> tuple[int, int, int]:
        """Machine speeds are pure powers of N; return the three exponents."""
        desc = self.gadget.machine_descs[machine]
        C = self.big_c
        kind = desc[0]
        if kind == "tmach":
            j, q = desc[1], desc[2]
            return (2 * (4 * j + 2 * q), -(C + 2 * j + q), C - 2 * j - q)
        if kind == "smach":
            ell, q, j, t = desc[1], desc[2], desc[3], desc[4]
            i_ = self.trace.iota(ell + (q + 1) // 2, j, t)
            b = 3 * ell + q
            return (2 * i_, b * C - 2 * i_, -b * C - 2 * i_)
        if kind == "amach":
            ell, q = desc[1], desc[2]
            i_ = self.trace.iota_star(ell)
            b = 3 * ell + q
            return (2 * i_ - 1, b * C - 2 * i_ + 1, -b * C - 2 * i_ + 1)
        # cmach
        i, s = desc[1], desc[2]
        return (2 * (3 * i + s), 3 * self.trace.k * C - 2 * (3 * i + s), -3 * self.trace.k * C - i)

    def size_terms(self, job: int) -> tuple[Term, ...]:
        desc = self.gadget.job_descs[job]
        C = self.big_c
        eps = self.eps
        one = RAT(1)
        two = RAT(2)
        kind = desc[0]
        if kind == "tjob":
            j = desc[1]
            return ((two, -2 * (4 * j + 2)), (two, C + 2 * j))
        if kind == "vjob":
            j, t = desc[1], desc[2]
            return (
                (eps, -2 * (4 * j + t)),
                (one, 2 * (4 * j + t)),
                (one, -C + 2 * j + t // 2),
            )
        if kind == "sjob":
            ell, q, j, t = desc[1], desc[2], desc[3], desc[4]
            gt = self.trace.tau(ell)
            lt = self.trace.swaps[ell].lt
            i_star = self.trace.iota_star(ell)
            if q == 0 and (j, t) == gt:
                return (
                    (two, -2 * (i_star + 1)),
                    (eps, -(3 * ell + 1) * C + 2 * (i_star + 1)),
                    (two, 3 * ell * C + 2 * i_star),
                )
            if q == 0 and (j, t) == lt:
                return (
                    (one, -2 * (i_star + 1)),
                    (one, -(3 * ell + 1) * C + 2 * i_star),
                    (eps, 3 * ell * C + 2 * (i_star + 1)),
                )
            if q == 1 and (j, t) == gt:
                return (
                    (eps, -2 * (i_star + 1)),
                    (two, -(3 * ell + 2) * C + 2 * (i_star + 1)),
                    (two, (3 * ell + 1) * C + 2 * (i_star + 1)),
                )
            i_next = self.trace.iota(ell + 1, j, t)
            b = 3 * ell + q
            return (
                (eps, -2 * i_next),
                (one, -(b + 1) * C + 2 * i_next),
                (one, b * C + 2 * i_next),
            )
        if kind == "abjob":
            ell, q = desc[1], desc[2]
            i_star = self.trace.iota_star(ell)
            b = 3 * ell + q
            return (
                (eps, -2 * i_star + 1),
                (one, -(b + 1) * C + 2 * i_star - 1),
                (one, b * C + 2 * i_star - 1),
            )
        if kind == "asjob":
            ell, q = desc[1], desc[2]
            i_star = self.trace.iota_star(ell)
            if q == 0:
                return (
                    (one, -2 * i_star),
                    (eps, -3 * ell * C + 2 * i_star - 1),
                    (one, 3 * ell * C + 2 * i_star - 1),
                )
            if q == 1:
                return (
                    (one, -2 * i_star),
                    (eps, -(3 * ell + 2) * C + 2 * i_star - 1),
                    (one, (3 * ell + 2) * C + 2 * i_star - 1),
                )
            return (
                (one, -2 * (i_star + 1)),
                (eps, -(3 * ell + 2) * C + 2 * i_star),
                (one, (3 * ell + 2) * C + 2 * i_star),
            )
        if kind == "priv":
            mdesc: Desc = desc[1]
            if mdesc[0] == "smach":
                ell, q, j, t = mdesc[1], mdesc[2], mdesc[3], mdesc[4]
                i_ = self.trace.iota(ell + (q + 1) // 2, j, t)
                b = 3 * ell + q
                return (
                    (one, -2 * i_),
                    (eps, -b * C + 2 * i_),
                    (eps, b * C + 2 * i_),
                )
            # amach private
            ell, q = mdesc[1], mdesc[2]
            i_star = self.trace.iota_star(ell)
            b = 3 * ell + q
            return (
                (one, -2 * i_star + 1),
                (eps, -b * C + 2 * i_star - 1),
                (eps, b * C + 2 * i_star - 1),
            )
        if kind == "cjob":
            i, s = desc[1], desc[2]
            phi = {0: one, 1: RAT(3 - self.formula.clauses[i].kind), 2: two}[s]
            return (
                (eps, -2 * (3 * i + 2)),
                (RAT(0), 0),
                (phi, 3 * self.trace.k * C + i),
            )
        raise ValueError(f"no numeric row for job descriptor {desc!r}")

    def processing_terms(self, job: int, machine: int) -> list[Term]:
        speeds = self.speed_exponents(machine)
        terms = self.size_terms(job)
        out = []
        for d, (coef, e) in enumerate(terms):
            if coef != 0:
                out.append((coef, e + speeds[d]))
        return out


def lrs3_processing_time(num: Lrs3Numeric, job: int, machine: int) -> Rational:
    """Exact ``p'_ij``, always fully evaluated."""
    total = RAT(0)
    for coef, e in num.processing_terms(job, machine):
        total += coef * num._npow(e)
    return total


@dataclass(frozen=True, slots=True)
class Lrs3Check:
    job: int
    machine: int
    status: str  # "eligible" | "blocked"
    value: Rational | None  # exact p'_ij, or None when an early exit fired


def lrs3_classify(num: Lrs3Numeric, job: int, machine: int) -> Lrs3Check:
    """Decide the trichotomy for one pair.

    Raises :class:`InvariantViolation` if neither (or both) of the claimed
    conditions holds -- which would falsify the construction.
    """
    terms = num.processing_terms(job, machine)
    for coef, e in terms:
        # all terms are positive: one monomial above cap settles it
        if e >= 2 or (e == 1 and coef > num.eps):
            return Lrs3Check(job=job, machine=machine, status="blocked", value=None)
    value = RAT(0)
    for coef, e in terms:
        value += coef * num._npow(e)
    p = RAT(num.gadget.instance.jobs[job].size)
    in_window = p <= value <= p + num.delta
    over_cap = value > num.cap
    if in_window and over_cap:
        raise InvariantViolation(
            f"trichotomy overlap for job {job} on machine {machine}: "
            f"value within window but above cap"
        )
    if not in_window and not over_cap:
        raise InvariantViolation(
            f"trichotomy gap for job {job} on machine {machine}: "
            f"value {value} neither in [{p}, {p + num.delta}] nor above {num.cap}"
        )
    return Lrs3Check(
        job=job, machine=machine, status="eligible" if in_window else "blocked", value=value
    )


@dataclass(frozen=True, slots=True)
class TrichotomyReport:
    pairs: int
    eligible: int
    blocked: int
    mismatches: tuple[tuple[int, int, str], ...]  # (job, machine, classified-as)


def trichotomy_report(num: Lrs3Numeric) -> TrichotomyReport:
    """Classify every job against its own and adjacent blocks (fully) plus
    three sampled distant blocks, and compare with the unit-size gadget's
    eligibility bit."""
    inst = num.gadget.instance
    by_block: dict[int, list[int]] = {}
    for machine in range(inst.machines):
        by_block.setdefault(num.machine_block(machine), []).append(machine)

    pairs = eligible = blocked = 0
    mismatches: list[tuple[int, int, str]] = []
    for job in range(len(inst.jobs)):
        own = {num.machine_block(m) for m in inst.jobs[job].eligible}
        near = set()
        for b in own:
            near.update({b - 1, b, b + 1})
        near = {b for b in near if 0 <= b < num.num_blocks}
        distant = sorted(set(range(num.num_blocks)) - near)
        sampled = list(near)
        if distant:
            picks = {0, len(distant) // 2, len(distant) - 1}
            sampled += [distant[p] for p in sorted(picks)]
        eligible_set = set(inst.jobs[job].eligible)
        for b in sorted(set(sampled)):
            for machine in by_block[b]:
                check = lrs3_classify(num, job, machine)
                pairs += 1
                if check.status == "eligible":
                    eligible += 1
                else:
                    blocked += 1
                expected = "eligible" if machine in eligible_set else "blocked"
                if check.status != expected:
                    mismatches.append((job, machine, check.status))
    return TrichotomyReport(
        pairs=pairs, eligible=eligible, blocked=blocked, mismatches=tuple(mismatches)
    )
