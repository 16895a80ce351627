"""Command-line interface.

Every subcommand prints one deterministic JSON report to stdout (fixed key
order, two-space indent), so identical invocations produce byte-identical
output.  Exit codes:

* 0 -- success (including ``verify`` reporting a bad schedule),
* 1 -- unreadable or malformed input file,
* 2 -- instance shape unsuited to the command (e.g. non-contiguous
  eligibility sets passed to ``solve``),
* 3 -- invalid parameters (rationals, parameter inequalities),
* 4 -- search budget exhausted before an answer was proved,
* 5 -- a violated internal guarantee (lemma check, trichotomy mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Mapping

from . import approx, exact, io, lff, lp
from .core import (
    InvariantViolation,
    RaiInstance,
    ResourceInstance,
    RestrictedInstance,
    as_interval,
    resource_to_restricted,
    validate,
)
from .rationals import format_rational, parse_rational
from .reductions.formula import parse_formula
from .reductions.gadgets import (
    reduce_lrs3_ra,
    reduce_rai,
    reduce_rar2,
    reduce_rar3,
    reduce_simple,
)
from .reductions.lrs3 import Lrs3Numeric, trichotomy_report

_REDUCTIONS = {
    "simple": reduce_simple,
    "rar3": reduce_rar3,
    "rar2": reduce_rar2,
    "rai": reduce_rai,
    "lrs3ra": reduce_lrs3_ra,
}


class _Fail(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _emit(report: Mapping[str, Any]) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Fail(1, f"cannot read {path}: {exc}") from exc


def _load_instance(path: str) -> io.AnyInstance:
    try:
        return io.parse_instance(_read_text(path))
    except ValueError as exc:
        raise _Fail(1, f"{path}: {exc}") from exc


def _load_formula(path: str):
    try:
        return parse_formula(_read_text(path))
    except ValueError as exc:
        raise _Fail(1, f"{path}: {exc}") from exc


def _rational_arg(text: str, flag: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise _Fail(3, f"{flag}: {exc}") from exc


def _interval_instance(inst: io.AnyInstance) -> RaiInstance:
    if isinstance(inst, ResourceInstance):
        try:
            inst = resource_to_restricted(inst)
        except ValueError as exc:
            raise _Fail(2, str(exc)) from exc
    if isinstance(inst, RestrictedInstance):
        rai = as_interval(inst)
        if rai is None:
            raise _Fail(2, "eligibility sets are not contiguous machine intervals")
        return rai
    return inst


def _plain_instance(inst: io.AnyInstance) -> RaiInstance | RestrictedInstance:
    if isinstance(inst, ResourceInstance):
        try:
            return resource_to_restricted(inst)
        except ValueError as exc:
            raise _Fail(2, str(exc)) from exc
    return inst


def _schedule_doc(schedule: Mapping[int, int]) -> dict[str, int]:
    return {str(j): schedule[j] for j in sorted(schedule)}


def _params(args: argparse.Namespace) -> lp.Params:
    gamma = _rational_arg(args.gamma, "--gamma")
    xi = _rational_arg(args.xi, "--xi")
    try:
        return lp.Params(gamma=gamma, xi=xi)
    except ValueError as exc:
        raise _Fail(3, str(exc)) from exc


def _cmd_solve(args: argparse.Namespace) -> int:
    raw = _load_instance(args.instance)
    inst = _interval_instance(raw)
    params = _params(args)
    result = approx.solve(inst, params)
    rounding = result.rounding
    report: dict[str, Any] = {
        "command": "solve",
        "instance_digest": io.instance_digest(raw),
        "machines": inst.machines,
        "jobs": len(inst.jobs),
        "gamma": format_rational(params.gamma),
        "xi": format_rational(params.xi),
        "t_star": result.t_star,
        "makespan": rounding.makespan,
        "cap": rounding.cap,
        "lemma_checks": [
            {"name": c.name, "ok": c.ok, "detail": c.detail} for c in rounding.checks
        ],
        "schedule": _schedule_doc(rounding.schedule),
    }
    if args.trace:
        report["trace"] = {
            "probes": [[t, feasible] for t, feasible in result.probes],
            "triggers": list(rounding.triggers),
            "points": list(rounding.regions.points),
            "regions": [list(span) for span in rounding.regions.spans],
            "candidates": list(rounding.regions.candidates),
        }
    _emit(report)
    if not all(c.ok for c in rounding.checks):
        return 5
    return 0


def _cmd_lff(args: argparse.Namespace) -> int:
    raw = _load_instance(args.instance)
    inst = _interval_instance(raw)
    result = lff.lff_schedule(inst)
    _emit(
        {
            "command": "lff",
            "instance_digest": io.instance_digest(raw),
            "machines": inst.machines,
            "jobs": len(inst.jobs),
            "bound": format_rational(result.bound.value),
            "bound_kind": result.bound.kind,
            "makespan": result.makespan,
            "loads": list(result.loads),
            "schedule": _schedule_doc(result.schedule),
        }
    )
    return 0


def _cmd_opt(args: argparse.Namespace) -> int:
    raw = _load_instance(args.instance)
    inst = _plain_instance(raw)
    budget = exact.SearchBudget(node_limit=args.node_limit, time_limit=args.time_limit)
    if args.objective == "makespan":
        result = exact.optimal_makespan(inst, budget)
    else:
        result = exact.optimal_min_load(inst, budget)
    _emit(
        {
            "command": "opt",
            "instance_digest": io.instance_digest(raw),
            "objective": args.objective,
            "status": result.status,
            "value": result.value,
            "nodes": result.nodes,
            "schedule": _schedule_doc(result.schedule) if result.schedule is not None else None,
        }
    )
    return 0 if result.status == "optimal" else 4


def _cmd_verify(args: argparse.Namespace) -> int:
    raw = _load_instance(args.instance)
    inst = _plain_instance(raw)
    try:
        schedule = io.parse_schedule(_read_text(args.schedule))
    except ValueError as exc:
        raise _Fail(1, f"{args.schedule}: {exc}") from exc
    mode = "exact" if args.exact is not None else "atmost"
    threshold = args.exact if args.exact is not None else args.atmost
    report = validate(inst, schedule, threshold, mode=mode)
    _emit(
        {
            "command": "verify",
            "instance_digest": io.instance_digest(raw),
            "mode": mode,
            "threshold": threshold,
            "ok": report.ok,
            "violations": list(report.violations),
            "loads": list(report.loads),
            "makespan": report.makespan,
            "min_load": report.min_load,
        }
    )
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    formula = _load_formula(args.formula)
    gadget = _REDUCTIONS[args.reduction](formula)
    instance_path = Path(args.out + ".json")
    names_path = Path(args.out + ".names.json")
    instance_path.write_text(io.serialize_instance(gadget.instance), encoding="utf-8")
    names_path.write_text(
        io.serialize_name_map(
            gadget.kind, gadget.target_T, gadget.machine_names(), gadget.job_names()
        ),
        encoding="utf-8",
    )
    restricted = gadget.restricted()
    _emit(
        {
            "command": "gen",
            "reduction": args.reduction,
            "variables": formula.num_vars,
            "clauses": formula.num_clauses,
            "target_T": gadget.target_T,
            "machines": restricted.machines,
            "jobs": len(restricted.jobs),
            "total_size": sum(j.size for j in restricted.jobs),
            "instance_digest": io.instance_digest(gadget.instance),
            "files": [str(instance_path), str(names_path)],
        }
    )
    return 0


def _cmd_lrs3_check(args: argparse.Namespace) -> int:
    formula = _load_formula(args.formula)
    delta = _rational_arg(args.delta, "--delta")
    cap = _rational_arg(args.cap, "--cap")
    try:
        numeric = Lrs3Numeric(formula, delta=delta, cap=cap)
    except ValueError as exc:
        raise _Fail(3, str(exc)) from exc
    report = trichotomy_report(numeric)
    _emit(
        {
            "command": "lrs3-check",
            "variables": formula.num_vars,
            "clauses": formula.num_clauses,
            "delta": format_rational(numeric.delta),
            "cap": format_rational(numeric.cap),
            "blocks": numeric.num_blocks,
            "machines": numeric.gadget.instance.machines,
            "jobs": len(numeric.gadget.instance.jobs),
            "pairs": report.pairs,
            "eligible": report.eligible,
            "blocked": report.blocked,
            "mismatches": [list(entry) for entry in report.mismatches],
        }
    )
    return 5 if report.mismatches else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intervalsched",
        description="Makespan approximation under interval machine restrictions.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("solve", help="binary search + LP rounding; (2 - gamma) guarantee")
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("--gamma", default="1/24", help="rounding slack, rational a/b")
    p.add_argument("--xi", default="1/24", help="large/huge split, rational a/b")
    p.add_argument("--trace", action="store_true", help="include search and rounding trace")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("lff", help="least-flexible-first list scheduling (2-approximation)")
    p.add_argument("instance", help="instance JSON file")
    p.set_defaults(handler=_cmd_lff)

    p = sub.add_parser("opt", help="exact branch-and-bound (small instances)")
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("--objective", choices=("makespan", "minload"), default="makespan")
    p.add_argument("--node-limit", type=int, default=2_000_000)
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    p.set_defaults(handler=_cmd_opt)

    p = sub.add_parser("verify", help="validate a schedule file against an instance")
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("schedule", help="schedule JSON file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--atmost", type=int, help="every load at most T")
    group.add_argument("--exact", type=int, help="every load exactly T")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("gen", help="build a scheduling gadget from a formula file")
    p.add_argument("formula", help="formula file (one clause per line: 'kind: l1 l2 l3')")
    p.add_argument("--reduction", choices=sorted(_REDUCTIONS), required=True)
    p.add_argument("--out", required=True, help="output stem; writes <stem>.json and <stem>.names.json")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("lrs3-check", help="verify the numeric rank-3 trichotomy")
    p.add_argument("formula", help="formula file")
    p.add_argument("--delta", default="1/2", help="eligibility window, rational a/b")
    p.add_argument("--cap", default="8", help="blocking threshold, rational a/b")
    p.set_defaults(handler=_cmd_lrs3_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    raise SystemExit(main())
