"""Gadget instances: five reductions from balanced exact-satisfiability
formulas to scheduling instances.

Each reduction produces a :class:`GadgetInstance` bundling the scheduling
instance with structured descriptors for its machines and jobs (so
schedules can be built from/read back into variable assignments) and the
target threshold ``T``:

==========  =====================  ===  ==========================
kind        instance flavour        T   distinguishing feature
==========  =====================  ===  ==========================
simple      restricted              2   plain eligibility sets
rar3        3 resources             2   eligibility via demand vectors
rar2        2 resources             7   eligibility via demand vectors
rai         interval                8   machine order + sorting blocks
lrs3_ra     restricted              2   sorting blocks with amplifiers
==========  =====================  ===  ==========================

A satisfiable formula admits a schedule loading every machine to exactly
``T``; conversely any exact-``T`` schedule encodes a satisfying assignment,
extracted by :func:`assignment_from_schedule`.

Shared conventions: variable jobs exist per occurrence ``(j, t)`` (``t`` in
``0, 1`` positive, ``2, 3`` negative; occurrence ``(j, t)`` is *true* under an
assignment when the corresponding literal is).  Truth machines come in pairs
``TMach(j, 0/1)``; the extraction rule is always "variable true iff its truth
job sits on ``TMach(j, 0)``".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import (
    InvariantViolation,
    RaiInstance,
    RaiJob,
    ResourceInstance,
    ResourceJob,
    RestrictedInstance,
    RestrictedJob,
    resource_to_restricted,
)
from .bubble import BubbleTrace, bubble_trace
from .formula import Formula, evaluate, kappa

Desc = tuple  # ("tmach", j, q), ("vjob", j, t, top), ("priv", <machine desc>), ...

_LABELS = {
    "tmach": "TMach",
    "cmach": "CMach",
    "bgmach": "BGMach",
    "fgmach": "FGMach",
    "bsmach": "BSMach",
    "fsmach": "FSMach",
    "smach": "SMach",
    "amach": "AMach",
    "tjob": "TJob",
    "vjob": "VJob",
    "gjob": "GJob",
    "bjob": "BJob",
    "sjob": "SJob",
    "abjob": "ABJob",
    "asjob": "ASJob",
    "cjob": "CJob",
    "priv": "Private",
}


def desc_name(desc: Desc) -> str:
    kind, *args = desc
    rendered = []
    for a in args:
        if isinstance(a, tuple):
            rendered.append(desc_name(a))
        elif isinstance(a, bool):
            rendered.append("top" if a else "bot")
        else:
            rendered.append(str(a))
    return f"{_LABELS[kind]}({','.join(rendered)})"


@dataclass
class GadgetInstance:
    kind: str
    target_T: int
    formula: Formula
    instance: RaiInstance | RestrictedInstance | ResourceInstance
    machine_descs: tuple[Desc, ...]
    job_descs: tuple[Desc, ...]
    trace: BubbleTrace | None = None
    _machine_index: dict[Desc, int] = field(init=False, repr=False)
    _job_index: dict[Desc, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._machine_index = {d: i for i, d in enumerate(self.machine_descs)}
        self._job_index = {d: j for j, d in enumerate(self.job_descs)}

    def machine(self, *desc) -> int:
        return self._machine_index[desc]

    def job(self, *desc) -> int:
        return self._job_index[desc]

    def machine_names(self) -> tuple[str, ...]:
        return tuple(desc_name(d) for d in self.machine_descs)

    def job_names(self) -> tuple[str, ...]:
        return tuple(desc_name(d) for d in self.job_descs)

    def restricted(self) -> RestrictedInstance:
        if isinstance(self.instance, RestrictedInstance):
            return self.instance
        if isinstance(self.instance, ResourceInstance):
            return resource_to_restricted(self.instance)
        from ..core import rai_to_restricted

        return rai_to_restricted(self.instance)


def _occurrence_truth(assignment: tuple[bool, ...], j: int, t: int) -> bool:
    return assignment[j] if t < 2 else not assignment[j]


def _require_satisfying(formula: Formula, assignment: tuple[bool, ...]) -> None:
    if not evaluate(formula, assignment):
        raise ValueError("assignment does not satisfy the formula")


def _pair_clause_jobs(
    cjobs: list[tuple[int, int]],  # (job id, size), ascending clause-job label
    slots: list[tuple[int, int]],  # (machine index, needed size), ascending s
) -> dict[int, int]:
    """Match clause jobs to row machines by needed size, order-preserving."""
    out: dict[int, int] = {}
    remaining = list(slots)
    for job_id, size in cjobs:
        for idx, (machine, need) in enumerate(remaining):
            if need == size:
                out[job_id] = machine
                del remaining[idx]
                break
        else:
            raise InvariantViolation(
                f"clause row cannot absorb clause job of size {size}; "
                f"unmatched slots {remaining}"
            )
    return out


# ---------------------------------------------------------------------------
# simple reduction (restricted eligibility, T = 2)


def _simple_cjob_size(clause_kind: int, s: int) -> int:
    if s == 0:
        return 1
    if s == 1:
        return 2 if clause_kind == 1 else 1
    return 2


def reduce_simple(formula: Formula) -> GadgetInstance:
    n = formula.num_vars
    slot_of = kappa(formula)

    machines: list[Desc] = [("tmach", j, q) for j in range(n) for q in (0, 1)]
    machines += [
        ("cmach", i, s) for i in range(formula.num_clauses) for s in range(3)
    ]
    index = {d: i for i, d in enumerate(machines)}

    jobs: list[Desc] = []
    sizes: list[int] = []
    eligible: list[tuple[int, ...]] = []

    for j in range(n):
        jobs.append(("tjob", j))
        sizes.append(2)
        eligible.append((index[("tmach", j, 0)], index[("tmach", j, 1)]))
    for i, clause in enumerate(formula.clauses):
        for s in range(3):
            jobs.append(("cjob", i, s))
            sizes.append(_simple_cjob_size(clause.kind, s))
            eligible.append(tuple(index[("cmach", i, sp)] for sp in range(3)))
    for j in range(n):
        for t in range(4):
            jobs.append(("vjob", j, t))
            sizes.append(1)
            eligible.append(
                tuple(
                    sorted((index[("tmach", j, t // 2)], index[("cmach", *slot_of[(j, t)])]))
                )
            )

    inst = RestrictedInstance(
        machines=len(machines),
        jobs=tuple(
            RestrictedJob(id=k, size=sizes[k], eligible=tuple(sorted(eligible[k])))
            for k in range(len(jobs))
        ),
    )
    return GadgetInstance(
        kind="simple",
        target_T=2,
        formula=formula,
        instance=inst,
        machine_descs=tuple(machines),
        job_descs=tuple(jobs),
    )


def _simple_like_schedule(
    gadget: GadgetInstance, assignment: tuple[bool, ...], cjob_size
) -> dict[int, int]:
    """Shared constructive schedule for the simple and rar3 reductions."""
    formula = gadget.formula
    slot_of = kappa(formula)
    schedule: dict[int, int] = {}
    for j in range(formula.num_vars):
        schedule[gadget.job("tjob", j)] = gadget.machine("tmach", j, 0 if assignment[j] else 1)
        for t in range(4):
            vjob = gadget.job("vjob", j, t)
            if _occurrence_truth(assignment, j, t):
                schedule[vjob] = gadget.machine("cmach", *slot_of[(j, t)])
            else:
                schedule[vjob] = gadget.machine("tmach", j, t // 2)
    occupied = {machine for machine in schedule.values()}
    for i, clause in enumerate(formula.clauses):
        cjobs = [
            (gadget.job("cjob", i, s), cjob_size(clause.kind, s)) for s in range(3)
        ]
        slots = []
        for sp in range(3):
            machine = gadget.machine("cmach", i, sp)
            slots.append((machine, 1 if machine in occupied else 2))
        schedule.update(_pair_clause_jobs(cjobs, slots))
    return schedule


# ---------------------------------------------------------------------------
# three-resource reduction (T = 2)


def reduce_rar3(formula: Formula) -> GadgetInstance:
    n = formula.num_vars
    slot_of = kappa(formula)
    inv = {v: k for k, v in slot_of.items()}

    machines: list[Desc] = []
    caps: list[tuple[int, int, int]] = []
    for j in range(n):
        machines.append(("tmach", j, 0))
        caps.append((4 * j + 1, 4 * n - 4 * j, 1))
        machines.append(("tmach", j, 1))
        caps.append((4 * j + 3, 4 * n - 4 * j, 0))
    for i in range(formula.num_clauses):
        for s in range(3):
            j, t = inv[(i, s)]
            machines.append(("cmach", i, s))
            caps.append((4 * j + t, 4 * n - (4 * j + t), 2 + i))

    jobs: list[Desc] = []
    sizes: list[int] = []
    demands: list[tuple[int, int, int]] = []
    for j in range(n):
        jobs.append(("tjob", j))
        sizes.append(2)
        demands.append((4 * j + 1, 4 * n - 4 * j, 0))
    for i, clause in enumerate(formula.clauses):
        for s in range(3):
            jobs.append(("cjob", i, s))
            sizes.append(_simple_cjob_size(clause.kind, s))
            demands.append((0, 0, 2 + i))
    for j in range(n):
        for t in range(4):
            jobs.append(("vjob", j, t))
            sizes.append(1)
            demands.append((4 * j + t, 4 * n - (4 * j + t), 1 - t // 2))

    inst = ResourceInstance(
        resources=3,
        machines=tuple(caps),
        jobs=tuple(
            ResourceJob(id=k, size=sizes[k], demand=demands[k]) for k in range(len(jobs))
        ),
    )
    return GadgetInstance(
        kind="rar3",
        target_T=2,
        formula=formula,
        instance=inst,
        machine_descs=tuple(machines),
        job_descs=tuple(jobs),
    )


# ---------------------------------------------------------------------------
# two-resource reduction (T = 7)


def _rar2_cjob_size(clause_kind: int, s: int) -> int:
    if s == 0:
        return 4
    if s == 1:
        return 4 + (2 - clause_kind)
    return 5


def reduce_rar2(formula: Formula) -> GadgetInstance:
    n = formula.num_vars
    slot_of = kappa(formula)
    inv = {v: k for k, v in slot_of.items()}

    machines: list[Desc] = []
    caps: list[tuple[int, int]] = []
    for j in range(n):
        for q in (0, 1):
            machines.append(("tmach", j, q))
            caps.append((2 * j + q, 6 * n - (2 * j + q)))
    for i in range(formula.num_clauses):
        for s in range(3):
            j, t = inv[(i, s)]
            machines.append(("cmach", i, s))
            caps.append((2 * n + i, 4 * j + t))

    jobs: list[Desc] = []
    sizes: list[int] = []
    demands: list[tuple[int, int]] = []
    for j in range(n):
        for ell, (size, demand) in enumerate(
            (
                (1, (2 * j, 6 * n - 2 * j)),
                (1, (2 * j + 1, 6 * n - (2 * j + 1))),
                (2, (2 * j, 6 * n - (2 * j + 1))),
            )
        ):
            jobs.append(("tjob", j, ell))
            sizes.append(size)
            demands.append(demand)
    for i, clause in enumerate(formula.clauses):
        for s in range(3):
            jobs.append(("cjob", i, s))
            sizes.append(_rar2_cjob_size(clause.kind, s))
            demands.append((2 * n + i, 0))
    for j in range(n):
        for t in range(4):
            for top in (False, True):
                jobs.append(("vjob", j, t, top))
                sizes.append(3 if top else 2)
                demands.append((2 * j + t // 2, 4 * j + t))

    inst = ResourceInstance(
        resources=2,
        machines=tuple(caps),
        jobs=tuple(
            ResourceJob(id=k, size=sizes[k], demand=demands[k]) for k in range(len(jobs))
        ),
    )
    return GadgetInstance(
        kind="rar2",
        target_T=7,
        formula=formula,
        instance=inst,
        machine_descs=tuple(machines),
        job_descs=tuple(jobs),
    )


def _rar2_schedule(gadget: GadgetInstance, assignment: tuple[bool, ...]) -> dict[int, int]:
    formula = gadget.formula
    slot_of = kappa(formula)
    schedule: dict[int, int] = {}
    for j in range(formula.num_vars):
        schedule[gadget.job("tjob", j, 0)] = gadget.machine("tmach", j, 0)
        schedule[gadget.job("tjob", j, 1)] = gadget.machine("tmach", j, 1)
        schedule[gadget.job("tjob", j, 2)] = gadget.machine("tmach", j, 0 if assignment[j] else 1)
        for t in range(4):
            v = _occurrence_truth(assignment, j, t)
            traveling = gadget.job("vjob", j, t, v)
            staying = gadget.job("vjob", j, t, not v)
            schedule[traveling] = gadget.machine("cmach", *slot_of[(j, t)])
            schedule[staying] = gadget.machine("tmach", j, t // 2)
    inst_sizes = {k: gadget.instance.jobs[k].size for k in range(len(gadget.job_descs))}
    for i, clause in enumerate(formula.clauses):
        cjobs = [
            (gadget.job("cjob", i, s), _rar2_cjob_size(clause.kind, s)) for s in range(3)
        ]
        slots = []
        for sp in range(3):
            machine = gadget.machine("cmach", i, sp)
            arrived = [k for k, m in schedule.items() if m == machine]
            got = sum(inst_sizes[k] for k in arrived)
            slots.append((machine, 7 - got))
        schedule.update(_pair_clause_jobs(cjobs, slots))
    return schedule


# ---------------------------------------------------------------------------
# interval reduction (T = 8)


def _rai_cjob_size(clause_kind: int, s: int) -> int:
    if s == 0:
        return 7
    if s == 1:
        return 8 - clause_kind
    return 6


def reduce_rai(formula: Formula) -> GadgetInstance:
    n = formula.num_vars
    slot_of = kappa(formula)
    trace = bubble_trace(formula)
    k = trace.k
    pairs_lex = [(j, t) for j in range(n) for t in range(4)]

    machines: list[Desc] = [("tmach", j, q) for j in range(n) for q in (0, 1)]
    machines += [("bgmach", j, t) for (j, t) in reversed(trace.phis[0])]
    machines += [("fgmach", j, t) for (j, t) in trace.phis[0]]
    for ell in range(k):
        machines += [("bsmach", ell, j, t) for (j, t) in reversed(trace.phis[ell])]
        machines += [("fsmach", ell, j, t) for (j, t) in trace.phis[ell + 1]]
    machines += [
        ("cmach", i, s)
        for i in reversed(range(formula.num_clauses))
        for s in reversed(range(3))
    ]
    index = {d: i for i, d in enumerate(machines)}

    jobs: list[Desc] = []
    sizes: list[int] = []
    spans: list[tuple[int, int]] = []

    def add(desc: Desc, size: int, first: Desc, last: Desc) -> None:
        jobs.append(desc)
        sizes.append(size)
        spans.append((index[first], index[last]))

    for j in range(n):
        add(("tjob", j), 2, ("tmach", j, 0), ("tmach", j, 1))
    for j, t in pairs_lex:
        for top in (False, True):
            add(("vjob", j, t, top), 3 if top else 2, ("tmach", j, t // 2), ("bgmach", j, t))
    for j, t in pairs_lex:
        for top in (False, True):
            add(("gjob", j, t, top), 4 if top else 5, ("bgmach", j, t), ("fgmach", j, t))
    for ell in range(k + 1):
        for j, t in pairs_lex:
            first = ("fgmach", j, t) if ell == 0 else ("fsmach", ell - 1, j, t)
            last = ("bsmach", ell, j, t) if ell < k else ("cmach", *slot_of[(j, t)])
            for top in (False, True):
                add(("bjob", ell, j, t, top), 2 if top else 1, first, last)
    for ell in range(k):
        gt = trace.tau(ell)
        for j, t in pairs_lex:
            top_size, bot_size = ((3, 4) if (j, t) == gt else (6, 7))
            add(("sjob", ell, j, t, False), bot_size, ("bsmach", ell, j, t), ("fsmach", ell, j, t))
            add(("sjob", ell, j, t, True), top_size, ("bsmach", ell, j, t), ("fsmach", ell, j, t))
    for i, clause in enumerate(formula.clauses):
        for s in range(3):
            add(("cjob", i, s), _rai_cjob_size(clause.kind, s), ("cmach", i, 2), ("cmach", i, 0))
    # private jobs, in machine order
    private_size = {"tmach": 2, "bgmach": 1, "fgmach": 2}
    for desc in machines:
        if desc[0] in private_size:
            add(("priv", desc), private_size[desc[0]], desc, desc)
        elif desc[0] in ("bsmach", "fsmach"):
            ell, j, t = desc[1], desc[2], desc[3]
            if (j, t) == trace.tau(ell):
                add(("priv", desc), 3, desc, desc)

    inst = RaiInstance(
        machines=len(machines),
        jobs=tuple(
            RaiJob(id=kk, size=sizes[kk], first=spans[kk][0], last=spans[kk][1])
            for kk in range(len(jobs))
        ),
    )
    return GadgetInstance(
        kind="rai",
        target_T=8,
        formula=formula,
        instance=inst,
        machine_descs=tuple(machines),
        job_descs=tuple(jobs),
        trace=trace,
    )


def _rai_schedule(gadget: GadgetInstance, assignment: tuple[bool, ...]) -> dict[int, int]:
    formula = gadget.formula
    trace = gadget.trace
    assert trace is not None
    slot_of = kappa(formula)
    k = trace.k
    schedule: dict[int, int] = {}

    for j in range(formula.num_vars):
        schedule[gadget.job("tjob", j)] = gadget.machine("tmach", j, 0 if assignment[j] else 1)
        for t in range(4):
            v = _occurrence_truth(assignment, j, t)
            schedule[gadget.job("vjob", j, t, v)] = gadget.machine("bgmach", j, t)
            schedule[gadget.job("vjob", j, t, not v)] = gadget.machine("tmach", j, t // 2)
            schedule[gadget.job("gjob", j, t, v)] = gadget.machine("bgmach", j, t)
            schedule[gadget.job("gjob", j, t, not v)] = gadget.machine("fgmach", j, t)
            for ell in range(k + 1):
                first = (
                    ("fgmach", j, t) if ell == 0 else ("fsmach", ell - 1, j, t)
                )
                last = (
                    ("bsmach", ell, j, t) if ell < k else ("cmach", *slot_of[(j, t)])
                )
                schedule[gadget.job("bjob", ell, j, t, v)] = gadget.machine(*last)
                schedule[gadget.job("bjob", ell, j, t, not v)] = gadget.machine(*first)
            for ell in range(k):
                schedule[gadget.job("sjob", ell, j, t, v)] = gadget.machine("bsmach", ell, j, t)
                schedule[gadget.job("sjob", ell, j, t, not v)] = gadget.machine("fsmach", ell, j, t)

    for i, clause in enumerate(formula.clauses):
        cjobs = [(gadget.job("cjob", i, s), _rai_cjob_size(clause.kind, s)) for s in range(3)]
        slots = []
        for sp in range(3):
            machine = gadget.machine("cmach", i, sp)
            j, t = next(p for p, slot in slot_of.items() if slot == (i, sp))
            slots.append((machine, 6 if _occurrence_truth(assignment, j, t) else 7))
        schedule.update(_pair_clause_jobs(cjobs, slots))

    for desc in gadget.job_descs:
        if desc[0] == "priv":
            schedule[gadget.job(*desc)] = gadget.machine(*desc[1])
    return schedule


# ---------------------------------------------------------------------------
# sorting-block reduction with unit sizes (restricted eligibility, T = 2)


def reduce_lrs3_ra(formula: Formula) -> GadgetInstance:
    n = formula.num_vars
    slot_of = kappa(formula)
    trace = bubble_trace(formula)
    k = trace.k
    pairs_lex = [(j, t) for j in range(n) for t in range(4)]

    machines: list[Desc] = [("tmach", j, q) for j in range(n) for q in (0, 1)]
    for block in range(3 * k):
        ell, q = divmod(block, 3)
        machines += [("smach", ell, q, j, t) for (j, t) in pairs_lex]
        machines.append(("amach", ell, q))
    machines += [("cmach", i, s) for i in range(formula.num_clauses) for s in range(3)]
    index = {d: i for i, d in enumerate(machines)}

    jobs: list[Desc] = []
    sizes: list[int] = []
    eligible: list[tuple[int, ...]] = []

    def add(desc: Desc, size: int, machines_for: list[Desc]) -> None:
        jobs.append(desc)
        sizes.append(size)
        eligible.append(tuple(sorted(index[d] for d in machines_for)))

    for j in range(n):
        add(("tjob", j), 2, [("tmach", j, 0), ("tmach", j, 1)])
    for j, t in pairs_lex:
        entry = ("smach", 0, 0, j, t) if k > 0 else ("cmach", *slot_of[(j, t)])
        add(("vjob", j, t), 1, [("tmach", j, t // 2), entry])
    for ell in range(k):
        gt = trace.tau(ell)
        lt = trace.swaps[ell].lt
        for q in range(3):
            for j, t in pairs_lex:
                here = ("smach", ell, q, j, t)
                if q == 2 and ell == k - 1:
                    nxt = ("cmach", *slot_of[(j, t)])
                else:
                    nell, nq = ell + q // 2, (q + 1) % 3
                    nxt = ("smach", nell, nq, j, t)
                if q == 0 and (j, t) == gt:
                    add(
                        ("sjob", ell, q, j, t),
                        2,
                        [here, ("smach", ell, 0, *lt), ("smach", ell, 1, j, t)],
                    )
                elif q == 0 and (j, t) == lt:
                    add(
                        ("sjob", ell, q, j, t),
                        1,
                        [here, ("smach", ell, 1, j, t), ("smach", ell, 1, *gt)],
                    )
                elif q == 1 and (j, t) == gt:
                    add(("sjob", ell, q, j, t), 2, [here, nxt])
                else:
                    add(("sjob", ell, q, j, t), 1, [here, nxt])
    # sorting-machine private jobs (all but four per step)
    for desc in machines:
        if desc[0] != "smach":
            continue
        ell, q, j, t = desc[1], desc[2], desc[3], desc[4]
        gt = trace.tau(ell)
        lt = trace.swaps[ell].lt
        if (j, t) == gt or (q == 2 and (j, t) == lt):
            continue
        add(("priv", desc), 1, [desc])
    for ell in range(k):
        gt = trace.tau(ell)
        lt = trace.swaps[ell].lt
        add(("abjob", ell, 0), 1, [("amach", ell, 0), ("amach", ell, 1)])
        add(("abjob", ell, 1), 1, [("amach", ell, 1), ("amach", ell, 2)])
        add(("asjob", ell, 0), 1, [("amach", ell, 0), ("smach", ell, 0, *gt)])
        add(("asjob", ell, 1), 1, [("amach", ell, 2), ("smach", ell, 2, *lt)])
        add(("asjob", ell, 2), 1, [("smach", ell, 2, *lt), ("smach", ell, 2, *gt)])
        for q in range(3):
            add(("priv", ("amach", ell, q)), 1, [("amach", ell, q)])
    for i, clause in enumerate(formula.clauses):
        for s in range(3):
            add(
                ("cjob", i, s),
                _simple_cjob_size(clause.kind, s),
                [("cmach", i, sp) for sp in range(3)],
            )

    inst = RestrictedInstance(
        machines=len(machines),
        jobs=tuple(
            RestrictedJob(id=kk, size=sizes[kk], eligible=eligible[kk])
            for kk in range(len(jobs))
        ),
    )
    return GadgetInstance(
        kind="lrs3_ra",
        target_T=2,
        formula=formula,
        instance=inst,
        machine_descs=tuple(machines),
        job_descs=tuple(jobs),
        trace=trace,
    )


def _lrs3_ra_schedule(gadget: GadgetInstance, assignment: tuple[bool, ...]) -> dict[int, int]:
    formula = gadget.formula
    trace = gadget.trace
    assert trace is not None
    slot_of = kappa(formula)
    k = trace.k
    n = formula.num_vars
    schedule: dict[int, int] = {}

    for j in range(n):
        schedule[gadget.job("tjob", j)] = gadget.machine("tmach", j, 0 if assignment[j] else 1)
        for t in range(4):
            v = _occurrence_truth(assignment, j, t)
            vjob = gadget.job("vjob", j, t)
            if not v:
                schedule[vjob] = gadget.machine("tmach", j, t // 2)
            elif k > 0:
                schedule[vjob] = gadget.machine("smach", 0, 0, j, t)
            else:
                schedule[vjob] = gadget.machine("cmach", *slot_of[(j, t)])

    for ell in range(k):
        gt = trace.tau(ell)
        lt = trace.swaps[ell].lt
        for q in range(3):
            for j, t in [(j, t) for j in range(n) for t in range(4)]:
                v = _occurrence_truth(assignment, j, t)
                sjob = gadget.job("sjob", ell, q, j, t)
                if not v:
                    schedule[sjob] = gadget.machine("smach", ell, q, j, t)
                    continue
                # true occurrences push their token one hop to the right
                if q == 2 and ell == k - 1:
                    schedule[sjob] = gadget.machine("cmach", *slot_of[(j, t)])
                elif q in (0, 1) and (j, t) in (gt, lt):
                    schedule[sjob] = gadget.machine("smach", ell, q + 1 if q == 0 else 2, j, t)
                else:
                    nell, nq = ell + q // 2, (q + 1) % 3
                    schedule[sjob] = gadget.machine("smach", nell, nq, j, t)
        v_gt = _occurrence_truth(assignment, *gt)
        if v_gt:
            schedule[gadget.job("asjob", ell, 0)] = gadget.machine("smach", ell, 0, *gt)
            schedule[gadget.job("abjob", ell, 0)] = gadget.machine("amach", ell, 0)
            schedule[gadget.job("abjob", ell, 1)] = gadget.machine("amach", ell, 1)
            schedule[gadget.job("asjob", ell, 1)] = gadget.machine("amach", ell, 2)
            schedule[gadget.job("asjob", ell, 2)] = gadget.machine("smach", ell, 2, *lt)
        else:
            schedule[gadget.job("asjob", ell, 0)] = gadget.machine("amach", ell, 0)
            schedule[gadget.job("abjob", ell, 0)] = gadget.machine("amach", ell, 1)
            schedule[gadget.job("abjob", ell, 1)] = gadget.machine("amach", ell, 2)
            schedule[gadget.job("asjob", ell, 1)] = gadget.machine("smach", ell, 2, *lt)
            schedule[gadget.job("asjob", ell, 2)] = gadget.machine("smach", ell, 2, *gt)

    for i, clause in enumerate(formula.clauses):
        cjobs = [
            (gadget.job("cjob", i, s), _simple_cjob_size(clause.kind, s)) for s in range(3)
        ]
        slots = []
        for sp in range(3):
            machine = gadget.machine("cmach", i, sp)
            j, t = next(p for p, slot in slot_of.items() if slot == (i, sp))
            slots.append((machine, 1 if _occurrence_truth(assignment, j, t) else 2))
        schedule.update(_pair_clause_jobs(cjobs, slots))

    for desc in gadget.job_descs:
        if desc[0] == "priv":
            schedule[gadget.job(*desc)] = gadget.machine(*desc[1])
    return schedule


# ---------------------------------------------------------------------------
# public entry points


def schedule_from_assignment(
    gadget: GadgetInstance, assignment: tuple[bool, ...]
) -> dict[int, int]:
    """Constructive exact-``T`` schedule for a satisfying assignment."""
    _require_satisfying(gadget.formula, assignment)
    if gadget.kind == "simple":
        return _simple_like_schedule(gadget, assignment, _simple_cjob_size)
    if gadget.kind == "rar3":
        return _simple_like_schedule(gadget, assignment, _simple_cjob_size)
    if gadget.kind == "rar2":
        return _rar2_schedule(gadget, assignment)
    if gadget.kind == "rai":
        return _rai_schedule(gadget, assignment)
    if gadget.kind == "lrs3_ra":
        return _lrs3_ra_schedule(gadget, assignment)
    raise ValueError(f"unknown gadget kind {gadget.kind!r}")


def assignment_from_schedule(gadget: GadgetInstance, schedule: dict[int, int]) -> tuple[bool, ...]:
    """Read the variable assignment off an exact-``T`` schedule."""
    n = gadget.formula.num_vars
    out = []
    for j in range(n):
        truth_job = ("tjob", j, 2) if gadget.kind == "rar2" else ("tjob", j)
        out.append(schedule[gadget.job(*truth_job)] == gadget.machine("tmach", j, 0))
    return tuple(out)
