import pytest

from intervalsched.rationals import RAT
from intervalsched.reductions import (
    Lrs3Numeric,
    lrs3_classify,
    lrs3_processing_time,
    parse_formula,
    trichotomy_report,
)

from conftest import MINIMAL_FORMULA, ZERO_SWAP_FORMULA


@pytest.fixture(scope="module")
def num():
    return Lrs3Numeric(parse_formula(MINIMAL_FORMULA))


class TestConstants:
    def test_defaults(self, num):
        assert num.delta == RAT(1) / 2
        assert num.cap == 8
        assert num.eps == RAT(1) / 4
        assert num.N == 32
        assert num.eps * num.N == num.cap
        assert num.big_c == 48
        assert num.trace.k == 22
        assert num.num_blocks == 68

    def test_parameter_validation(self):
        formula = parse_formula(MINIMAL_FORMULA)
        with pytest.raises(ValueError, match="delta"):
            Lrs3Numeric(formula, delta=0)
        with pytest.raises(ValueError, match="delta"):
            Lrs3Numeric(formula, delta=2)
        with pytest.raises(ValueError, match="cap"):
            Lrs3Numeric(formula, cap=RAT(1) / 2)

    def test_machine_blocks(self, num):
        g = num.gadget
        k = num.trace.k
        assert num.machine_block(g.machine("tmach", 0, 0)) == 0
        assert num.machine_block(g.machine("tmach", 2, 1)) == 0
        assert num.machine_block(g.machine("smach", 0, 0, 0, 0)) == 1
        assert num.machine_block(g.machine("smach", 5, 1, 0, 0)) == 1 + 3 * 5 + 1
        assert num.machine_block(g.machine("amach", k - 1, 2)) == 3 * k
        assert num.machine_block(g.machine("cmach", 0, 0)) == 3 * k + 1
        assert num.machine_block(g.machine("cmach", 3, 2)) == 3 * k + 1


class TestSpotValues:
    # frozen by hand from the monomial tables; N = 32, eps = 1/4, C = 48
    def test_truth_job_on_home_machines(self, num):
        g = num.gadget
        N = RAT(32)
        value = lrs3_processing_time(num, g.job("tjob", 0), g.machine("tmach", 0, 0))
        assert value == 2 * N**-4 + 2
        value = lrs3_processing_time(num, g.job("tjob", 0), g.machine("tmach", 0, 1))
        assert value == 2 + 2 * N**-1

    def test_variable_job_entering_first_block(self, num):
        g = num.gadget
        N = RAT(32)
        value = lrs3_processing_time(
            num, g.job("vjob", 0, 0), g.machine("smach", 0, 0, 0, 0)
        )
        assert value == 1 + num.eps + N**-48

    def test_amplifier_bridge_is_blocked(self, num):
        g = num.gadget
        N = RAT(32)
        job = g.job("asjob", 0, 2)
        machine = g.machine("amach", 0, 2)
        check = lrs3_classify(num, job, machine)
        assert check.status == "blocked"
        assert check.value is None  # an order-N monomial fired the early exit
        assert lrs3_processing_time(num, job, machine) == N + num.eps * N + N**-3

    def test_clause_job_on_clause_row(self, num):
        g = num.gadget
        N = RAT(32)
        job = g.job("cjob", 0, 0)
        machine = g.machine("cmach", 0, 1)
        value = lrs3_processing_time(num, job, machine)
        assert value == num.eps * N**-2 + 1
        check = lrs3_classify(num, job, machine)
        assert check.status == "eligible"
        assert check.value == value

    def test_negative_occurrence_blocked_on_positive_truth_machine(self, num):
        g = num.gadget
        check = lrs3_classify(num, g.job("vjob", 0, 2), g.machine("tmach", 0, 0))
        assert check.status == "blocked"


class TestClassifyAgainstFullEvaluation:
    def test_zero_swap_gadget_exhaustively(self):
        # k = 0: two blocks, 18 machines, 27 jobs -- check every pair twice over
        num = Lrs3Numeric(parse_formula(ZERO_SWAP_FORMULA))
        assert num.trace.k == 0
        assert num.num_blocks == 2
        inst = num.gadget.instance
        for job in range(len(inst.jobs)):
            eligible = set(inst.jobs[job].eligible)
            for machine in range(inst.machines):
                check = lrs3_classify(num, job, machine)
                full = lrs3_processing_time(num, job, machine)
                expected = "eligible" if machine in eligible else "blocked"
                assert check.status == expected, (job, machine)
                if check.value is None:
                    assert full > num.cap
                else:
                    assert check.value == full

    def test_eligible_window_sample(self, num):
        # every eligible pair of the first forty jobs sits in [p, p + delta]
        inst = num.gadget.instance
        for job in range(40):
            p = RAT(inst.jobs[job].size)
            for machine in inst.jobs[job].eligible:
                value = lrs3_processing_time(num, job, machine)
                assert p <= value <= p + num.delta, (job, machine)


class TestTrichotomyReport:
    def test_minimal_formula_frozen_counts(self, num):
        report = trichotomy_report(num)
        assert report.mismatches == ()
        assert report.pairs == 129447
        assert report.eligible == 2684
        assert report.blocked == 126763
        assert report.pairs == report.eligible + report.blocked

    def test_zero_swap_formula(self):
        num = Lrs3Numeric(parse_formula(ZERO_SWAP_FORMULA))
        report = trichotomy_report(num)
        assert report.mismatches == ()
        assert report.pairs == 27 * 18  # two blocks: every pair gets checked
