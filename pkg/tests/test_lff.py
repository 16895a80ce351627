import random

from intervalsched import RaiInstance, RaiJob, lff_schedule, lower_bound, optimal_makespan
from intervalsched.rationals import RAT


def rai(m, *jobs):
    return RaiInstance(
        machines=m,
        jobs=tuple(RaiJob(id=k, size=s, first=f, last=l) for k, (s, f, l) in enumerate(jobs)),
    )


class TestLowerBound:
    def test_job_witness_preferred(self):
        inst = rai(2, (2, 0, 0), (2, 0, 1))
        lb = lower_bound(inst)
        assert lb.value == 2
        assert lb.kind == "job"
        assert lb.job == 0  # max size, then min id

    def test_interval_witness_when_strictly_larger(self):
        # three size-3 jobs confined to machine 0: average 9 beats max size 3
        inst = rai(2, (3, 0, 0), (3, 0, 0), (3, 0, 0))
        lb = lower_bound(inst)
        assert lb.value == 9
        assert lb.kind == "interval"
        assert (lb.lo, lb.hi) == (0, 0)

    def test_fractional_average(self):
        # interval [0, 1] holds 7 units over 2 machines: bound 7/2 > 3
        inst = rai(3, (3, 0, 1), (3, 0, 1), (1, 0, 1))
        lb = lower_bound(inst)
        assert lb.value == RAT(7) / 2
        assert lb.kind == "interval"

    def test_empty(self):
        inst = RaiInstance(machines=3, jobs=())
        lb = lower_bound(inst)
        assert lb.value == 0
        assert lb.kind == "empty"


class TestLffSchedule:
    def test_hand_trace(self):
        # L = 2; machine 0 absorbs both jobs (its load only exceeds L after
        # the second placement), demonstrating the L + max p worst case
        inst = rai(2, (2, 0, 0), (2, 0, 1))
        res = lff_schedule(inst)
        assert res.bound.value == 2
        assert res.schedule == {0: 0, 1: 0}
        assert res.loads == (4, 0)
        assert res.makespan == 4

    def test_least_flexible_goes_first(self):
        # job 1 has the narrower window and must claim machine 0 first
        inst = rai(2, (5, 0, 1), (5, 0, 0))
        res = lff_schedule(inst)
        assert res.schedule[1] == 0

    def test_empty_instance(self):
        res = lff_schedule(RaiInstance(machines=2, jobs=()))
        assert res.schedule == {}
        assert res.makespan == 0

    def test_deterministic(self):
        inst = rai(3, (4, 0, 2), (4, 0, 2), (4, 1, 2), (1, 0, 1))
        assert lff_schedule(inst).schedule == lff_schedule(inst).schedule


def random_instance(rng):
    m = rng.randint(2, 6)
    n = rng.randint(1, 12)
    jobs = []
    for j in range(n):
        first = rng.randint(0, m - 1)
        jobs.append(
            RaiJob(
                id=j,
                size=rng.randint(1, 20),
                first=first,
                last=rng.randint(first, m - 1),
            )
        )
    return RaiInstance(machines=m, jobs=tuple(jobs))


def test_load_bound_and_eligibility_on_random_instances():
    rng = random.Random(88111)
    for trial in range(120):
        inst = random_instance(rng)
        res = lff_schedule(inst)
        assert set(res.schedule) == {j.id for j in inst.jobs}
        for j, i in res.schedule.items():
            assert inst.jobs[j].first <= i <= inst.jobs[j].last
        max_p = max(j.size for j in inst.jobs)
        bound = res.bound.value + max_p
        assert all(RAT(load) <= bound for load in res.loads), f"trial {trial}"


def test_two_approximation_against_exact_oracle():
    rng = random.Random(88112)
    for trial in range(40):
        inst = random_instance(rng)
        res = lff_schedule(inst)
        opt = optimal_makespan(inst)
        assert opt.status == "optimal"
        assert res.bound.value <= RAT(opt.value), f"trial {trial}: bound exceeds OPT"
        assert res.makespan <= 2 * opt.value, f"trial {trial}: worse than 2-approx"
