"""Shared fixtures: the random instance corpus and exact-oracle results.

The corpus is pinned by seed so every run exercises the same 200 instances
(2..6 machines, up to 10 jobs, sizes up to 20).  Solving and the exact
oracles are session-scoped: the acceptance criteria and the module tests
share one computation.
"""

from __future__ import annotations

import random
import time

import pytest

from intervalsched import RaiInstance, RaiJob, optimal_makespan, solve

CORPUS_SEED = 20240811
CORPUS_SIZE = 200

MINIMAL_FORMULA = """\
1: 1 2 -3
1: -1 2 3
2: 1 -2 -3
2: -1 -2 3
"""

# lex-first unsatisfiable balanced formula (see tests/test_acceptance.py for
# the search that reproduces it)
UNSAT_FORMULA = """\
1: 1 1 -1
1: -1 2 2
2: -2 3 3
2: -2 -3 -3
"""

# satisfiable with zero swaps in the occurrence-sorting trace
ZERO_SWAP_FORMULA = """\
1: 1 1 -1
1: -1 2 2
2: -2 -2 3
2: 3 -3 -3
"""


def make_corpus(seed: int = CORPUS_SEED, size: int = CORPUS_SIZE) -> list[RaiInstance]:
    rng = random.Random(seed)
    corpus = []
    for _ in range(size):
        m = rng.randint(2, 6)
        n = rng.randint(1, 10)
        jobs = []
        for j in range(n):
            p = rng.randint(1, 20)
            first = rng.randint(0, m - 1)
            last = rng.randint(first, m - 1)
            jobs.append(RaiJob(id=j, size=p, first=first, last=last))
        corpus.append(RaiInstance(machines=m, jobs=tuple(jobs)))
    return corpus


@pytest.fixture(scope="session")
def corpus() -> list[RaiInstance]:
    return make_corpus()


@pytest.fixture(scope="session")
def corpus_opt(corpus):
    """Exact optimal makespans, computed independently of the LP pipeline."""
    results = [optimal_makespan(inst) for inst in corpus]
    assert all(r.status == "optimal" for r in results)
    return [r.value for r in results]


@pytest.fixture(scope="session")
def corpus_solved(corpus):
    """(solve results, elapsed seconds) for the whole corpus."""
    start = time.monotonic()
    results = [solve(inst) for inst in corpus]
    return results, time.monotonic() - start
