"""JSON file formats: instances, schedules, machine/job name maps.

Serialization is canonical -- fixed key order, two-space indent, trailing
newline -- so identical objects always produce byte-identical files and
:func:`instance_digest` is stable across runs.

Instance documents carry a ``format`` tag:

* ``rai``: ``machines`` count and per-job ``size``/``first``/``last``
  (contiguous machine interval); job ids are the array positions.
* ``restricted``: per-job ``eligible`` machine list.
* ``resource``: ``resources`` dimension count, per-machine capacity vectors,
  per-job ``demand`` vectors.

A schedule document is ``{"schedule": {"<job>": machine, ...}}`` with job
keys serialized in numeric order.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any, Mapping, Sequence

from .core import (
    RaiInstance,
    RaiJob,
    ResourceInstance,
    ResourceJob,
    RestrictedInstance,
    RestrictedJob,
)

AnyInstance = RaiInstance | RestrictedInstance | ResourceInstance


def _dump(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _int_field(obj: Mapping[str, Any], key: str, where: str) -> int:
    _require(key in obj, f"{where}: missing field {key!r}")
    value = obj[key]
    _require(isinstance(value, int) and not isinstance(value, bool), f"{where}: field {key!r} must be an integer")
    return value


def _int_list(value: Any, where: str) -> list[int]:
    _require(
        isinstance(value, list)
        and all(isinstance(v, int) and not isinstance(v, bool) for v in value),
        f"{where}: expected a list of integers",
    )
    return value


def serialize_instance(inst: AnyInstance) -> str:
    if isinstance(inst, RaiInstance):
        payload = {
            "format": "rai",
            "machines": inst.machines,
            "jobs": [
                {"size": j.size, "first": j.first, "last": j.last} for j in inst.jobs
            ],
        }
    elif isinstance(inst, RestrictedInstance):
        payload = {
            "format": "restricted",
            "machines": inst.machines,
            "jobs": [{"size": j.size, "eligible": list(j.eligible)} for j in inst.jobs],
        }
    elif isinstance(inst, ResourceInstance):
        payload = {
            "format": "resource",
            "resources": inst.resources,
            "machines": [list(caps) for caps in inst.machines],
            "jobs": [{"size": j.size, "demand": list(j.demand)} for j in inst.jobs],
        }
    else:
        raise TypeError(f"not an instance: {type(inst).__name__}")
    return _dump(payload)


def parse_instance(text: str) -> AnyInstance:
    """Parse an instance document; raises ``ValueError`` with a location."""
    doc = json.loads(text)
    _require(isinstance(doc, dict), "instance document must be a JSON object")
    fmt = doc.get("format")
    _require(
        fmt in ("rai", "restricted", "resource"),
        f"unknown instance format {fmt!r} (expected rai, restricted, or resource)",
    )
    jobs_raw = doc.get("jobs")
    _require(isinstance(jobs_raw, list), "instance: 'jobs' must be a list")

    if fmt == "rai":
        machines = _int_field(doc, "machines", "instance")
        jobs = tuple(
            RaiJob(
                id=pos,
                size=_int_field(job, "size", f"job {pos}"),
                first=_int_field(job, "first", f"job {pos}"),
                last=_int_field(job, "last", f"job {pos}"),
            )
            for pos, job in enumerate(jobs_raw)
        )
        return RaiInstance(machines=machines, jobs=jobs)
    if fmt == "restricted":
        machines = _int_field(doc, "machines", "instance")
        jobs = tuple(
            RestrictedJob(
                id=pos,
                size=_int_field(job, "size", f"job {pos}"),
                eligible=tuple(_int_list(job.get("eligible"), f"job {pos} eligible")),
            )
            for pos, job in enumerate(jobs_raw)
        )
        return RestrictedInstance(machines=machines, jobs=jobs)

    resources = _int_field(doc, "resources", "instance")
    machines_raw = doc.get("machines")
    _require(isinstance(machines_raw, list), "instance: 'machines' must be a list of capacity vectors")
    caps = tuple(
        tuple(_int_list(row, f"machine {i} capacities")) for i, row in enumerate(machines_raw)
    )
    jobs = tuple(
        ResourceJob(
            id=pos,
            size=_int_field(job, "size", f"job {pos}"),
            demand=tuple(_int_list(job.get("demand"), f"job {pos} demand")),
        )
        for pos, job in enumerate(jobs_raw)
    )
    return ResourceInstance(resources=resources, machines=caps, jobs=jobs)


def instance_digest(inst: AnyInstance) -> str:
    """sha256 of the canonical serialization; stable across runs."""
    return hashlib.sha256(serialize_instance(inst).encode("utf-8")).hexdigest()


def serialize_schedule(schedule: Mapping[int, int]) -> str:
    return _dump({"schedule": {str(j): schedule[j] for j in sorted(schedule)}})


def parse_schedule(text: str) -> dict[int, int]:
    doc = json.loads(text)
    _require(isinstance(doc, dict), "schedule document must be a JSON object")
    raw = doc.get("schedule")
    _require(isinstance(raw, dict), "schedule document needs a 'schedule' object")
    out: dict[int, int] = {}
    for key, value in raw.items():
        try:
            job = int(key)
        except ValueError:
            raise ValueError(f"schedule: job key {key!r} is not an integer") from None
        _require(
            isinstance(value, int) and not isinstance(value, bool),
            f"schedule: machine for job {key} must be an integer",
        )
        out[job] = value
    return out


def serialize_name_map(
    kind: str,
    target_t: int,
    machine_names: Sequence[str],
    job_names: Sequence[str],
) -> str:
    """Sidecar document mapping machine/job indices to gadget part names."""
    return _dump(
        {
            "kind": kind,
            "target_T": target_t,
            "machines": {str(i): name for i, name in enumerate(machine_names)},
            "jobs": {str(j): name for j, name in enumerate(job_names)},
        }
    )
