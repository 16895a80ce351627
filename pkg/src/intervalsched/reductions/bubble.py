"""Canonical bubble-sort trace over a formula's occurrence permutation.

Write ``phi_0`` for the ``4n`` occurrence pairs ``(j, t)`` in lexicographic
order and ``psi_0 = kappa(phi_0)`` for their clause slots.  Bubble-sorting
``psi_0`` into slot order with adjacent transpositions yields, after ``k``
swaps (``k`` = number of inversions), the slot-ordered permutation.  The
sorting gadgets need the full trace:

* ``phi_ell``: the occurrence order before swap ``ell``;
* swap ``ell`` exchanges positions ``iota_star(ell)`` and ``iota_star(ell)+1``
  of ``phi_ell``; the pair moving right (index increasing) is ``gt``, the
  other ``lt``; ``tau(ell)`` names the ``gt`` pair;
* ``iota(ell, j, t)``: the index of ``(j, t)`` in ``phi_ell``.

By construction ``iota(0, j, t) = 4j + t`` and ``iota(k, .)`` inverts to the
slot order ``3i + s``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Formula, kappa

Pair = tuple[int, int]


@dataclass(frozen=True, slots=True)
class SwapStep:
    pos: int  # = iota_star: index whose two occupants get exchanged
    gt: Pair  # pair whose index increases (also called tau of the step)
    lt: Pair


@dataclass(frozen=True, slots=True)
class BubbleTrace:
    num_vars: int
    phis: tuple[tuple[Pair, ...], ...]  # k+1 snapshots
    swaps: tuple[SwapStep, ...]
    _index: tuple[dict[Pair, int], ...]

    @property
    def k(self) -> int:
        return len(self.swaps)

    def iota(self, ell: int, j: int, t: int) -> int:
        return self._index[ell][(j, t)]

    def iota_star(self, ell: int) -> int:
        return self.swaps[ell].pos

    def tau(self, ell: int) -> Pair:
        return self.swaps[ell].gt


def bubble_trace(formula: Formula) -> BubbleTrace:
    slot_of = kappa(formula)
    seq: list[Pair] = [(j, t) for j in range(formula.num_vars) for t in range(4)]
    phis = [tuple(seq)]
    swaps: list[SwapStep] = []
    while True:
        swapped = False
        for p in range(len(seq) - 1):
            if slot_of[seq[p]] > slot_of[seq[p + 1]]:
                gt, lt = seq[p], seq[p + 1]
                seq[p], seq[p + 1] = lt, gt
                swaps.append(SwapStep(pos=p, gt=gt, lt=lt))
                phis.append(tuple(seq))
                swapped = True
        if not swapped:
            break
    index = tuple({pair: idx for idx, pair in enumerate(snapshot)} for snapshot in phis)
    return BubbleTrace(
        num_vars=formula.num_vars,
        phis=tuple(phis),
        swaps=tuple(swaps),
        _index=index,
    )
