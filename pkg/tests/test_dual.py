import random

from hypothesis import given, settings

from twostage import (
    Instance, Schedule, dual_instance, dual_job, dualize_schedule, evaluate_schedule,
    oracle_solve, simulate_shop,
)

from conftest import instances, jobs_strategy


def test_dual_job_examples():
    assert dual_job((3, 1)) == (1, 3)
    assert dual_job((0, 5)) == (5, 0)
    assert dual_job((2, 2)) == (2, 2)


def test_dual_instance_examples():
    inst = Instance([(1, 5), (1, 5)], 2)
    assert dual_instance(inst) == Instance([(5, 1), (5, 1)], 2)
    assert dual_instance(dual_instance(inst)) == inst
    assert dual_instance(Instance([], 3)) == Instance([], 3)


def test_dual_instance_swaps_totals():
    inst = Instance([(1, 5), (2, 7)], 2)
    dual = dual_instance(inst)
    assert (dual.total_r, dual.total_t) == (inst.total_t, inst.total_r)


def test_dualize_single_shop():
    inst = Instance([(1, 2), (2, 1)], 1)
    dual = dual_instance(inst)
    dual_sched = Schedule((0, 0), ((1, 0),), (simulate_shop([dual.jobs[1], dual.jobs[0]]),), 4)
    assert dual_sched.completions[0][1] == 4
    back = dualize_schedule(inst, dual_sched)
    assert back.order == ((0, 1),)
    assert back.makespan == 4


def test_dualize_empty():
    inst = Instance([], 2)
    back = dualize_schedule(inst, evaluate_schedule(dual_instance(inst), []))
    assert back.makespan == 0


def test_dualize_one_job_per_shop():
    inst = Instance([(1, 4), (3, 2)], 2)
    sched = evaluate_schedule(dual_instance(inst), [0, 1])
    back = dualize_schedule(inst, sched)
    assert back.completions[0][1] == sched.completions[0][1] == 5
    assert back.completions[1][1] == sched.completions[1][1] == 5


def test_dualize_rejects_mismatch():
    import pytest
    inst = Instance([(1, 1)], 2)
    with pytest.raises(ValueError):
        dualize_schedule(inst, evaluate_schedule(Instance([], 2), []))


@given(jobs_strategy(8, 10))
def test_reversed_dual_sequence_same_completion(jobs):
    tau = simulate_shop(jobs)[1]
    assert simulate_shop(dual_job(j) for j in reversed(jobs))[1] == tau


@settings(max_examples=40, deadline=None)
@given(instances(max_n=8, max_dur=8))
def test_dual_optimum_invariant(inst):
    assert oracle_solve(inst).makespan == oracle_solve(dual_instance(inst)).makespan


def test_dualize_preserves_makespan_and_involution():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(0, 8)
        m = rng.choice([1, 2, 3])
        inst = Instance([(rng.randint(0, 9), rng.randint(0, 9)) for _ in range(n)], m)
        sched = evaluate_schedule(inst, [rng.randrange(m) for _ in range(n)])
        dual = dual_instance(inst)
        there = dualize_schedule(dual, sched)
        assert there.makespan == sched.makespan
        back = dualize_schedule(inst, there)
        assert back.order == sched.order
        assert back.completions == sched.completions
