"""Balanced exact-satisfiability formulas.

The gadget constructions consume a restricted clause form: ``2m`` clauses
over ``n`` variables where the first ``m`` clauses are satisfied by exactly
one true literal (kind 1), the last ``m`` by exactly two (kind 2), and every
literal (each polarity of each variable) occurs exactly twice overall.
Counting slots gives ``6m = 4n``, so ``n`` is divisible by 3.

Text format, one clause per line, variables 1-based, ``-`` for negation::

    1: 1 2 -3
    2: -1 -2 3

Occurrences of a variable ``j`` are numbered ``t in {0, 1}`` for its positive
and ``t in {2, 3}`` for its negative occurrences, in clause-major scan order;
:func:`kappa` maps ``(j, t)`` to the clause slot ``(i, s)`` housing it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

#: literal = (variable, negated)
Literal = tuple[int, bool]


@dataclass(frozen=True, slots=True)
class Clause:
    kind: int  # exactly-1 or exactly-2 of the three slots must be true
    literals: tuple[Literal, Literal, Literal]

    def __post_init__(self) -> None:
        if self.kind not in (1, 2):
            raise ValueError(f"clause kind must be 1 or 2, got {self.kind}")
        if len(self.literals) != 3:
            raise ValueError("clauses have exactly three literal slots")


@dataclass(frozen=True, slots=True)
class Formula:
    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        n, clauses = self.num_vars, self.clauses
        if n < 1 or n % 3:
            raise ValueError(f"variable count must be a positive multiple of 3, got {n}")
        if len(clauses) != 4 * n // 3:
            raise ValueError(
                f"expected {4 * n // 3} clauses for {n} variables, got {len(clauses)}"
            )
        half = len(clauses) // 2
        for i, clause in enumerate(clauses):
            expected = 1 if i < half else 2
            if clause.kind != expected:
                raise ValueError(
                    f"clause {i}: kind {clause.kind}, but the first half must be 1 "
                    f"and the second half 2"
                )
        counts: dict[Literal, int] = {}
        for i, clause in enumerate(clauses):
            for var, neg in clause.literals:
                if not 0 <= var < n:
                    raise ValueError(f"clause {i}: variable {var} out of range")
                counts[(var, neg)] = counts.get((var, neg), 0) + 1
        for var in range(n):
            for neg in (False, True):
                c = counts.get((var, neg), 0)
                if c != 2:
                    name = f"{'-' if neg else ''}{var + 1}"
                    raise ValueError(f"literal {name} occurs {c} times, expected exactly 2")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def parse_formula(text: str) -> Formula:
    clauses: list[Clause] = []
    max_var = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ValueError(f"line {lineno}: expected 'k: l1 l2 l3'")
        try:
            kind = int(head)
            lits = [int(tok) for tok in rest.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers in 'k: l1 l2 l3'") from None
        if len(lits) != 3 or any(v == 0 for v in lits):
            raise ValueError(f"line {lineno}: expected three nonzero literals")
        literals = tuple((abs(v) - 1, v < 0) for v in lits)
        max_var = max(max_var, *(abs(v) for v in lits))
        clauses.append(Clause(kind=kind, literals=literals))  # type: ignore[arg-type]
    return Formula(num_vars=max_var, clauses=tuple(clauses))


def format_formula(formula: Formula) -> str:
    lines = []
    for clause in formula.clauses:
        body = " ".join(f"{-(v + 1) if neg else v + 1}" for v, neg in clause.literals)
        lines.append(f"{clause.kind}: {body}")
    return "\n".join(lines) + "\n"


def evaluate(formula: Formula, assignment: Sequence[bool]) -> bool:
    """True iff every clause has exactly ``kind`` true slots."""
    if len(assignment) != formula.num_vars:
        raise ValueError("assignment length does not match variable count")
    for clause in formula.clauses:
        true_slots = sum(assignment[var] != neg for var, neg in clause.literals)
        if true_slots != clause.kind:
            return False
    return True


def kappa(formula: Formula) -> dict[tuple[int, int], tuple[int, int]]:
    """Occurrence map ``(j, t) -> (i, s)``: positive occurrences of variable
    ``j`` get ``t = 0, 1`` and negative ones ``t = 2, 3``, both in clause-major
    scan order."""
    seen_pos = [0] * formula.num_vars
    seen_neg = [0] * formula.num_vars
    out: dict[tuple[int, int], tuple[int, int]] = {}
    for i, clause in enumerate(formula.clauses):
        for s, (var, neg) in enumerate(clause.literals):
            if neg:
                t = 2 + seen_neg[var]
                seen_neg[var] += 1
            else:
                t = seen_pos[var]
                seen_pos[var] += 1
            out[(var, t)] = (i, s)
    return out


def random_formula(num_vars: int, rng: random.Random) -> Formula:
    """Uniformly shuffle the occurrence multiset into clauses.

    Retries whenever a triple degenerates to three occurrences of one
    literal (cannot actually happen with two copies per literal, but the
    guard documents the intent and protects against future edits).
    """
    if num_vars < 3 or num_vars % 3:
        raise ValueError("variable count must be a positive multiple of 3")
    occurrences = [
        (var, neg) for var in range(num_vars) for neg in (False, True) for _ in range(2)
    ]
    half = len(occurrences) // 6  # = m, the count per clause kind
    while True:
        rng.shuffle(occurrences)
        triples = [tuple(occurrences[k : k + 3]) for k in range(0, len(occurrences), 3)]
        if any(len(set(t)) == 1 for t in triples):
            continue
        clauses = tuple(
            Clause(kind=1 if idx < half else 2, literals=t)  # type: ignore[arg-type]
            for idx, t in enumerate(triples)
        )
        return Formula(num_vars=num_vars, clauses=clauses)
