"""Acceptance criteria, one test per criterion.

Each test prints ``ACCEPTANCE <n> (<slug>): PASS|FAIL`` before asserting, so
``pytest tests/test_acceptance.py -v -s`` gives one verdict line per
criterion.  All tolerances are pinned here: approximation ratios are checked
in exact rational arithmetic, wall-clock budgets are hard limits, and the
reference values were computed independently before being frozen.
"""

import itertools
import json
import random
import subprocess
import sys
import time

import pytest

from intervalsched import (
    RAT,
    exists_exact_T_schedule,
    lff_schedule,
    lower_bound,
    sat_brute_force,
    solve_feasibility,
    validate,
)
from intervalsched.io import serialize_instance
from intervalsched.rationals import rceil
from intervalsched.reductions import (
    Lrs3Numeric,
    assignment_from_schedule,
    evaluate,
    lrs3_classify,
    lrs3_processing_time,
    parse_formula,
    random_formula,
    reduce_lrs3_ra,
    reduce_rai,
    reduce_rar2,
    reduce_rar3,
    reduce_simple,
    schedule_from_assignment,
    trichotomy_report,
)

from conftest import MINIMAL_FORMULA, UNSAT_FORMULA, ZERO_SWAP_FORMULA
from test_cli import SMOKE

REDUCTIONS = {
    "simple": reduce_simple,
    "rar3": reduce_rar3,
    "rar2": reduce_rar2,
    "rai": reduce_rai,
    "lrs3_ra": reduce_lrs3_ra,
}

LEMMA_NAMES = [
    "huge_interval_bound",
    "large_interval_bound",
    "region_candidates",
    "one_big_job_per_machine",
    "small_cap",
    "frac_large_window",
]


def _verdict(number: int, slug: str, ok: bool, detail: str = "") -> None:
    print(f"\nACCEPTANCE {number} ({slug}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {number} ({slug}): {detail}"


def _num_machines(gadget) -> int:
    return len(gadget.machine_descs)


def test_criterion_1_approximation_guarantee(corpus, corpus_solved, corpus_opt):
    """solve() succeeds on all 200 corpus instances, the rounded makespan is
    at most (2 - 1/24) * t_star in exact arithmetic, t_star never exceeds the
    true optimum, and the whole corpus solves in under five minutes."""
    results, elapsed = corpus_solved
    ratio = RAT(2) - RAT(1) / 24
    failures = []
    for idx, (inst, res, opt) in enumerate(zip(corpus, results, corpus_opt)):
        report = validate(inst, res.rounding.schedule, res.rounding.cap)
        if not report.ok:
            failures.append(f"instance {idx}: invalid schedule {report.violations[:2]}")
        if RAT(res.rounding.makespan) > ratio * RAT(res.t_star):
            failures.append(
                f"instance {idx}: makespan {res.rounding.makespan} > (47/24)*{res.t_star}"
            )
        if res.t_star > opt:
            failures.append(f"instance {idx}: t_star {res.t_star} above optimum {opt}")
    if elapsed >= 300.0:
        failures.append(f"corpus took {elapsed:.1f}s (budget 300s)")
    _verdict(1, "approximation-guarantee", not failures, "; ".join(failures[:4]))


def test_criterion_2_lemma_checks(corpus_solved):
    """All six rounding invariants hold on every corpus instance."""
    results, _ = corpus_solved
    failures = []
    for idx, res in enumerate(results):
        names = [c.name for c in res.rounding.checks]
        if names != LEMMA_NAMES:
            failures.append(f"instance {idx}: check names {names}")
        for check in res.rounding.checks:
            if not check.ok:
                failures.append(f"instance {idx}: {check.name}: {check.detail}")
    _verdict(2, "lemma-checks", not failures, "; ".join(failures[:4]))


def test_criterion_3_least_flexible_first(corpus, corpus_opt):
    """LFF places every job, keeps loads within L + max job size, stays
    within twice the optimum, and its bound L never exceeds the optimum."""
    failures = []
    for idx, (inst, opt) in enumerate(zip(corpus, corpus_opt)):
        res = lff_schedule(inst)
        max_size = max(job.size for job in inst.jobs)
        if len(res.schedule) != len(inst.jobs):
            failures.append(f"instance {idx}: {len(res.schedule)}/{len(inst.jobs)} placed")
        if not validate(inst, res.schedule, res.makespan).ok:
            failures.append(f"instance {idx}: eligibility violated")
        if any(RAT(load) > RAT(res.bound.value) + max_size for load in res.loads):
            failures.append(f"instance {idx}: load above L + max size")
        if res.makespan > 2 * opt:
            failures.append(f"instance {idx}: makespan {res.makespan} > 2*{opt}")
        if RAT(res.bound.value) > opt:
            failures.append(f"instance {idx}: bound {res.bound.value} above optimum")
    _verdict(3, "least-flexible-first", not failures, "; ".join(failures[:4]))


def test_criterion_4_lp_exactness(corpus, corpus_opt):
    """The extended assignment LP is feasible at the true optimum on every
    corpus instance, and infeasible at optimum - 1 on every instance whose
    optimum is pinned by the interval lower bound (at least 20 such)."""
    failures = []
    spot = 0
    for idx, (inst, opt) in enumerate(zip(corpus, corpus_opt)):
        if solve_feasibility(inst, opt) is None:
            failures.append(f"instance {idx}: LP infeasible at optimum {opt}")
        bound = lower_bound(inst)
        if bound.kind == "interval" and opt == rceil(bound.value):
            spot += 1
            if solve_feasibility(inst, opt - 1) is not None:
                failures.append(f"instance {idx}: LP feasible below optimum")
    if spot < 20:
        failures.append(f"only {spot} interval-pinned instances (need 20)")
    _verdict(4, "lp-exactness", not failures, "; ".join(failures[:4]))


def test_criterion_5_gadget_mass_identities():
    """Every reduction of the minimal formula has its frozen shape, and on
    ten seeded random formulas (n in 3/6/9) total job size equals T times
    the machine count for all five reductions, inside a minute."""
    start = time.monotonic()
    failures = []
    shapes = {
        "simple": (18, 27, 36, 2),
        "rar3": (18, 27, 36, 2),
        "rar2": (18, 45, 126, 7),
        "rai": (570, 1217, 4560, 8),
        "lrs3_ra": (876, 1699, 1752, 2),
    }
    minimal = parse_formula(MINIMAL_FORMULA)
    for kind, build in REDUCTIONS.items():
        g = build(minimal)
        got = (
            _num_machines(g),
            len(g.job_descs),
            sum(job.size for job in g.instance.jobs),
            g.target_T,
        )
        if got != shapes[kind]:
            failures.append(f"{kind}: shape {got} != {shapes[kind]}")

    rng = random.Random(977001)
    formulas = [random_formula(n, rng) for n in (3, 3, 3, 3, 6, 6, 6, 9, 9, 9)]
    for fidx, formula in enumerate(formulas):
        for kind, build in REDUCTIONS.items():
            g = build(formula)
            total = sum(job.size for job in g.instance.jobs)
            if total != g.target_T * _num_machines(g):
                failures.append(f"formula {fidx} {kind}: mass {total} != T*machines")
    elapsed = time.monotonic() - start
    if elapsed >= 60.0:
        failures.append(f"took {elapsed:.1f}s (budget 60s)")
    _verdict(5, "gadget-mass-identities", not failures, "; ".join(failures[:4]))


def test_criterion_6_gadget_schedules():
    """The minimal formula has exactly the models 000 and 101; for both,
    every reduction's constructive schedule is exactly-T valid and reads
    back to the same assignment."""
    failures = []
    minimal = parse_formula(MINIMAL_FORMULA)
    models = [
        tuple(bool(mask >> j & 1) for j in range(3))
        for mask in range(8)
        if evaluate(minimal, tuple(bool(mask >> j & 1) for j in range(3)))
    ]
    if models != [(False, False, False), (True, False, True)]:
        failures.append(f"model set {models}")
    for kind, build in REDUCTIONS.items():
        g = build(minimal)
        for assignment in models:
            schedule = schedule_from_assignment(g, assignment)
            report = validate(g.restricted(), schedule, g.target_T, mode="exact")
            if not report.ok:
                failures.append(f"{kind} {assignment}: {report.violations[:2]}")
            if assignment_from_schedule(g, schedule) != assignment:
                failures.append(f"{kind} {assignment}: round trip changed assignment")
    _verdict(6, "gadget-schedules", not failures, "; ".join(failures[:4]))


def _lex_first_unsat_formula() -> str:
    """Smallest balanced formula (lex order over sorted literal-code clause
    tuples, kind-1 pair then kind-2 pair) that no assignment satisfies.

    Literal codes: 2v for variable v+1 positive, 2v+1 negated.  Every code
    must appear exactly twice across the four clauses of a 3-variable
    formula, so candidates pair a kind-1 clause pair with a kind-2 pair
    holding the complementary occurrence counts.
    """
    triples = list(itertools.combinations_with_replacement(range(6), 3))

    def count_vec(*clauses):
        vec = [0] * 6
        for clause in clauses:
            for code in clause:
                vec[code] += 1
        return vec

    pair_by_counts: dict[tuple, list] = {}
    for c2, c3 in itertools.combinations_with_replacement(triples, 2):
        pair_by_counts.setdefault(tuple(count_vec(c2, c3)), []).append((c2, c3))
    for pairs in pair_by_counts.values():
        pairs.sort()

    def text(clauses) -> str:
        lines = []
        for kind, clause in zip((1, 1, 2, 2), clauses):
            body = " ".join(
                str((code // 2 + 1) * (-1 if code % 2 else 1)) for code in clause
            )
            lines.append(f"{kind}: {body}")
        return "\n".join(lines) + "\n"

    for c0, c1 in itertools.combinations_with_replacement(triples, 2):
        have = count_vec(c0, c1)
        if any(v > 2 for v in have):
            continue
        need = tuple(2 - v for v in have)
        for c2, c3 in pair_by_counts.get(need, []):
            candidate = text((c0, c1, c2, c3))
            if sat_brute_force(parse_formula(candidate)) is None:
                return candidate
    raise AssertionError("search space exhausted without an unsatisfiable formula")


def test_criterion_7_exact_search_on_gadgets():
    """The exact search finds target-T schedules for the simple and
    three-resource gadgets of the minimal formula, and proves absence on the
    simple gadget of the canonical unsatisfiable witness -- which the
    lex-first search must reproduce from scratch."""
    failures = []
    witness = _lex_first_unsat_formula()
    if witness != UNSAT_FORMULA:
        failures.append(f"lex-first unsat witness changed: {witness!r}")

    minimal = parse_formula(MINIMAL_FORMULA)
    for kind, build in (("simple", reduce_simple), ("rar3", reduce_rar3)):
        g = build(minimal)
        inst = g.restricted()
        res = exists_exact_T_schedule(inst, g.target_T)
        if res.status != "found":
            failures.append(f"{kind}: exists status {res.status}")
        elif not validate(inst, res.schedule, g.target_T, mode="exact").ok:
            failures.append(f"{kind}: returned schedule is not exactly-T")

    unsat_gadget = reduce_simple(parse_formula(UNSAT_FORMULA))
    res = exists_exact_T_schedule(unsat_gadget.restricted(), unsat_gadget.target_T)
    if res.status != "absent":
        failures.append(f"unsat gadget: exists status {res.status}")
    if res.nodes == 0:
        failures.append("unsat gadget: absence came from a precheck, not the search")
    _verdict(7, "exact-search-on-gadgets", not failures, "; ".join(failures[:4]))


def test_criterion_8_numeric_trichotomy():
    """Every checked (job, machine) pair of the numeric rank-3 gadget agrees
    with the unit-size gadget's eligibility, five frozen monomial spot values
    match, and the report finishes inside ten minutes."""
    start = time.monotonic()
    failures = []
    num = Lrs3Numeric(parse_formula(MINIMAL_FORMULA))
    g = num.gadget
    N = RAT(32)

    spots = [
        (g.job("tjob", 0), g.machine("tmach", 0, 0), 2 * N**-4 + 2),
        (g.job("tjob", 0), g.machine("tmach", 0, 1), 2 + 2 * N**-1),
        (g.job("vjob", 0, 0), g.machine("smach", 0, 0, 0, 0), 1 + num.eps + N**-48),
        (g.job("asjob", 0, 2), g.machine("amach", 0, 2), N + num.eps * N + N**-3),
        (g.job("cjob", 0, 0), g.machine("cmach", 0, 1), num.eps * N**-2 + 1),
    ]
    for job, machine, expected in spots:
        got = lrs3_processing_time(num, job, machine)
        if got != expected:
            failures.append(f"spot ({job},{machine}): {got} != {expected}")
    if lrs3_classify(num, g.job("asjob", 0, 2), g.machine("amach", 0, 2)).status != "blocked":
        failures.append("amplifier bridge pair should be blocked")

    report = trichotomy_report(num)
    if report.mismatches:
        failures.append(f"{len(report.mismatches)} mismatches, first {report.mismatches[0]}")
    if report.pairs != 129447:
        failures.append(f"pair census changed: {report.pairs}")
    elapsed = time.monotonic() - start
    if elapsed >= 600.0:
        failures.append(f"took {elapsed:.1f}s (budget 600s)")
    _verdict(8, "numeric-trichotomy", not failures, "; ".join(failures[:4]))


def test_criterion_9_deterministic_reports(tmp_path):
    """Identical CLI invocations produce byte-identical reports and output
    files (solve with trace, gadget generation, trichotomy check)."""
    failures = []
    inst_path = tmp_path / "inst.json"
    inst_path.write_text(serialize_instance(SMOKE), encoding="utf-8")
    formula_path = tmp_path / "formula.txt"
    formula_path.write_text(MINIMAL_FORMULA, encoding="utf-8")
    zero_path = tmp_path / "zero.txt"
    zero_path.write_text(ZERO_SWAP_FORMULA, encoding="utf-8")
    stem = tmp_path / "gadget"

    commands = {
        "solve": ["solve", str(inst_path), "--trace"],
        "gen": ["gen", str(formula_path), "--reduction", "rai", "--out", str(stem)],
        "lrs3-check": ["lrs3-check", str(zero_path)],
    }
    for name, argv in commands.items():
        outputs = []
        files = []
        for _ in range(2):
            proc = subprocess.run(
                [sys.executable, "-m", "intervalsched", *argv],
                capture_output=True,
                cwd=tmp_path,
            )
            if proc.returncode != 0:
                failures.append(f"{name}: exit {proc.returncode}: {proc.stderr[:120]!r}")
            outputs.append(proc.stdout)
            if name == "gen":
                files.append(
                    (
                        (tmp_path / "gadget.json").read_bytes(),
                        (tmp_path / "gadget.names.json").read_bytes(),
                    )
                )
        if outputs[0] != outputs[1]:
            failures.append(f"{name}: reports differ between runs")
        if files and files[0] != files[1]:
            failures.append("gen: output files differ between runs")
        if name == "solve" and outputs[0]:
            report = json.loads(outputs[0])
            if report.get("t_star") != 7 or report.get("makespan") != 8:
                failures.append(f"solve: unexpected report values {report.get('t_star')}")
    _verdict(9, "deterministic-reports", not failures, "; ".join(failures[:4]))
