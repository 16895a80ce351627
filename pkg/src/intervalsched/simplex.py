"""Exact phase-1 simplex for rational feasibility systems.

This is a feasibility solver, not a general LP optimizer: it answers whether
``{x >= 0 : A x (<=|=) b}`` has a solution and produces one witness.  All
pivoting is done in exact rational arithmetic with Bland's rule (lowest
eligible column enters, ties on the leaving row broken by lowest basic
variable index), which makes the run deterministic and cycle-free.

Rows are sparse ``{column: coefficient}`` dicts.  Structural variables are
columns ``0..n-1``; slack and artificial columns are appended internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Mapping

from .core import InvariantViolation
from .rationals import RAT, Rational

Sense = Literal["le", "eq"]


@dataclass(frozen=True, slots=True)
class Row:
    coeffs: Mapping[int, Rational]
    sense: Sense
    rhs: Rational


def solve_feasibility_system(num_structural: int, rows: list[Row]) -> dict[int, Rational] | None:
    """Return a sparse solution ``{col: value}`` for the structural columns,
    or ``None`` when the system is infeasible."""
    zero = RAT(0)
    one = RAT(1)

    tableau: list[dict[int, Rational]] = []  # coefficient dicts, structural+slack+artificial
    rhs: list[Rational] = []
    basis: list[int] = []
    artificial_rows: list[int] = []

    next_col = num_structural
    for row in rows:
        coeffs = {c: RAT(v) for c, v in row.coeffs.items() if RAT(v) != zero}
        b = RAT(row.rhs)
        if row.sense == "le":
            if b >= zero:
                slack = next_col
                next_col += 1
                coeffs[slack] = one
                tableau.append(coeffs)
                rhs.append(b)
                basis.append(slack)
            else:
                # negate into >= with positive rhs: surplus slack -1, artificial +1
                coeffs = {c: -v for c, v in coeffs.items()}
                b = -b
                slack = next_col
                next_col += 1
                coeffs[slack] = -one
                art = next_col
                next_col += 1
                coeffs[art] = one
                tableau.append(coeffs)
                rhs.append(b)
                basis.append(art)
                artificial_rows.append(len(tableau) - 1)
        elif row.sense == "eq":
            if b < zero:
                coeffs = {c: -v for c, v in coeffs.items()}
                b = -b
            art = next_col
            next_col += 1
            coeffs[art] = one
            tableau.append(coeffs)
            rhs.append(b)
            basis.append(art)
            artificial_rows.append(len(tableau) - 1)
        else:  # pragma: no cover - Literal typing keeps this unreachable
            raise ValueError(f"unknown sense {row.sense!r}")

    artificial_cols = {basis[r] for r in artificial_rows}

    # Phase-1 objective  z = sum(artificials) = R - sum_j C_j x_j  over nonbasics.
    cost: dict[int, Rational] = {}
    obj = zero
    for r in artificial_rows:
        obj += rhs[r]
        for c, v in tableau[r].items():
            if c in artificial_cols:
                continue
            acc = cost.get(c, zero) + v
            if acc == zero:
                cost.pop(c, None)
            else:
                cost[c] = acc

    def pivot(prow: int, pcol: int) -> None:
        nonlocal obj
        piv = tableau[prow][pcol]
        if piv != one:
            inv = one / piv
            tableau[prow] = {c: v * inv for c, v in tableau[prow].items()}
            rhs[prow] *= inv
        prow_coeffs = tableau[prow]
        for r in range(len(tableau)):
            if r == prow:
                continue
            factor = tableau[r].get(pcol)
            if factor is None or factor == zero:
                continue
            target = tableau[r]
            for c, v in prow_coeffs.items():
                acc = target.get(c, zero) - factor * v
                if acc == zero:
                    target.pop(c, None)
                else:
                    target[c] = acc
            rhs[r] -= factor * rhs[prow]
        factor = cost.get(pcol)
        if factor is not None and factor != zero:
            for c, v in prow_coeffs.items():
                acc = cost.get(c, zero) - factor * v
                if acc == zero:
                    cost.pop(c, None)
                else:
                    cost[c] = acc
            obj -= factor * rhs[prow]
        basis[prow] = pcol

    while True:
        entering = None
        for c, v in cost.items():
            if v > zero and c not in artificial_cols:
                if entering is None or c < entering:
                    entering = c
        if entering is None:
            break
        leaving = None
        best_ratio = None
        for r, coeffs in enumerate(tableau):
            a = coeffs.get(entering)
            if a is None or a <= zero:
                continue
            ratio = rhs[r] / a
            if (
                best_ratio is None
                or ratio < best_ratio
                or (ratio == best_ratio and basis[r] < basis[leaving])
            ):
                best_ratio = ratio
                leaving = r
        if leaving is None:
            raise InvariantViolation(
                "phase-1 objective unbounded; the tableau state is corrupt"
            )
        pivot(leaving, entering)

    if obj != zero:
        return None

    solution: dict[int, Rational] = {}
    for r, var in enumerate(basis):
        if var < num_structural and rhs[r] != zero:
            solution[var] = rhs[r]
    return solution
