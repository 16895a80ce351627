"""Compare the exact-rational backends on a representative solve workload.

The package picks gmpy2 at import time when available and falls back to
``fractions.Fraction`` otherwise, steered by ``INTERVALSCHED_RATIONAL_BACKEND``.
Because the choice happens at import, each backend is timed in a fresh
subprocess:

    python3 benchmarks/rational_backends.py

prints one line per backend (instances solved, wall seconds) plus the
speedup ratio.  An unavailable backend is reported, not an error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time

BACKENDS = ("gmpy2", "fraction")
INSTANCES = 120
SEED = 73011


def _workload_instances():
    from intervalsched import RaiInstance, RaiJob

    rng = random.Random(SEED)
    instances = []
    for _ in range(INSTANCES):
        m = rng.randint(2, 8)
        n = rng.randint(4, 14)
        jobs = []
        for j in range(n):
            first = rng.randint(0, m - 1)
            last = rng.randint(first, m - 1)
            jobs.append(RaiJob(id=j, size=rng.randint(1, 50), first=first, last=last))
        instances.append(RaiInstance(machines=m, jobs=tuple(jobs)))
    return instances


def _run_worker() -> None:
    from intervalsched import solve
    from intervalsched.rationals import BACKEND_NAME

    instances = _workload_instances()
    start = time.monotonic()
    checksum = 0
    for inst in instances:
        result = solve(inst)
        checksum += result.t_star + result.rounding.makespan
    elapsed = time.monotonic() - start
    json.dump(
        {
            "backend": BACKEND_NAME,
            "instances": len(instances),
            "seconds": elapsed,
            "checksum": checksum,
        },
        sys.stdout,
    )
    sys.stdout.write("\n")


def _time_backend(backend: str) -> dict | None:
    env = dict(os.environ, INTERVALSCHED_RATIONAL_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--worker"],
        capture_output=True,
        text=True,
        env=env,
    )
    if proc.returncode != 0:
        sys.stderr.write(proc.stderr)
        return None
    return json.loads(proc.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.worker:
        _run_worker()
        return 0

    results = []
    for backend in BACKENDS:
        timing = _time_backend(backend)
        if timing is None:
            print(f"{backend:>10}: unavailable")
            continue
        results.append(timing)
        rate = timing["instances"] / timing["seconds"]
        print(
            f"{timing['backend']:>10}: {timing['instances']} instances in "
            f"{timing['seconds']:.2f}s ({rate:.0f}/s)"
        )
    if len(results) == 2:
        if results[0]["checksum"] != results[1]["checksum"]:
            print("WARNING: backends disagree on solve results")
            return 1
        ratio = results[1]["seconds"] / results[0]["seconds"]
        print(f"{results[0]['backend']} is {ratio:.2f}x faster than {results[1]['backend']}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
