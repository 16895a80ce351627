import random

from intervalsched.reductions import bubble_trace, kappa, parse_formula, random_formula

from conftest import MINIMAL_FORMULA, ZERO_SWAP_FORMULA


class TestMinimalTrace:
    # slot ranks 3i+s of phi_0 = lexicographic (j, t), frozen by hand from the
    # occurrence table of the minimal formula
    PSI0_RANKS = [0, 6, 3, 9, 1, 4, 7, 10, 5, 11, 2, 8]

    def test_initial_snapshot_and_rank_sequence(self):
        formula = parse_formula(MINIMAL_FORMULA)
        trace = bubble_trace(formula)
        slot_of = kappa(formula)
        assert trace.phis[0] == tuple((j, t) for j in range(3) for t in range(4))
        ranks = [3 * i + s for i, s in (slot_of[p] for p in trace.phis[0])]
        assert ranks == self.PSI0_RANKS

    def test_swap_count_is_inversion_count(self):
        trace = bubble_trace(parse_formula(MINIMAL_FORMULA))
        inversions = sum(
            1
            for a in range(12)
            for b in range(a + 1, 12)
            if self.PSI0_RANKS[a] > self.PSI0_RANKS[b]
        )
        assert inversions == 22
        assert trace.k == 22
        assert len(trace.swaps) == 22
        assert len(trace.phis) == 23

    def test_zero_swap_formula(self):
        trace = bubble_trace(parse_formula(ZERO_SWAP_FORMULA))
        assert trace.k == 0
        assert len(trace.phis) == 1


def check_identities(formula):
    trace = bubble_trace(formula)
    n = formula.num_vars
    slot_of = kappa(formula)

    # endpoints: iota(0, j, t) = 4j + t and iota(k, .) inverts the slot order
    for j in range(n):
        for t in range(4):
            assert trace.iota(0, j, t) == 4 * j + t
    for (j, t), (i, s) in slot_of.items():
        assert trace.iota(trace.k, j, t) == 3 * i + s

    pairs = [(j, t) for j in range(n) for t in range(4)]
    for ell, step in enumerate(trace.swaps):
        pos = trace.iota_star(ell)
        assert step.pos == pos
        assert trace.tau(ell) == step.gt
        # adjacency: the swapped pair occupies pos and pos+1 before the step
        assert trace.phis[ell][pos] == step.gt
        assert trace.phis[ell][pos + 1] == step.lt
        # movement identities
        assert trace.iota(ell, *step.gt) == pos
        assert trace.iota(ell + 1, *step.gt) == pos + 1
        assert trace.iota(ell, *step.lt) == pos + 1
        assert trace.iota(ell + 1, *step.lt) == pos
        # the swap moves a strictly greater slot rank right past a smaller one
        assert slot_of[step.gt] > slot_of[step.lt]
        # every other pair keeps its index
        for pair in pairs:
            if pair not in (step.gt, step.lt):
                assert trace.iota(ell + 1, *pair) == trace.iota(ell, *pair)

    # final snapshot is sorted by slot rank
    final_ranks = [3 * i + s for i, s in (slot_of[p] for p in trace.phis[-1])]
    assert final_ranks == sorted(final_ranks)


def test_identities_on_minimal():
    check_identities(parse_formula(MINIMAL_FORMULA))


def test_identities_on_random_formulas():
    rng = random.Random(515099)
    for n in (3, 3, 6, 6, 9):
        check_identities(random_formula(n, rng))


def test_deterministic():
    formula = parse_formula(MINIMAL_FORMULA)
    assert bubble_trace(formula) == bubble_trace(formula)
