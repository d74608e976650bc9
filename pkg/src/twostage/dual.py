"""Dual jobs: swap R- and T-times.

Reversing a shop's sequence and dualizing every job leaves the shop's
completion time unchanged, so an instance and its dual share the same
optimum and solutions carry across by reversing each shop's order.
"""
from __future__ import annotations

from typing import Sequence

from .core import Instance, Job, Schedule, simulate_shop


def dual_job(job: Sequence[int]) -> Job:
    r, t = job
    return Job(t, r)


def dual_instance(instance: Instance) -> Instance:
    return Instance([dual_job(j) for j in instance.jobs], instance.m)


def dualize_schedule(instance: Instance, schedule: Schedule) -> Schedule:
    """Turn a schedule of ``dual_instance(instance)`` into one of ``instance``.

    The partition is kept; every shop runs its jobs in reverse order.
    """
    if len(schedule.assignment) != instance.n or schedule.m != instance.m:
        raise ValueError(
            f"schedule covers {len(schedule.assignment)} jobs on {schedule.m} shops, "
            f"instance has {instance.n} jobs on {instance.m} shops"
        )
    order = tuple(tuple(reversed(seq)) for seq in schedule.order)
    for shop, seq in enumerate(order):
        if any(schedule.assignment[i] != shop for i in seq):
            raise ValueError(f"shop {shop} order disagrees with the assignment")
    completions = tuple(simulate_shop(instance.jobs[i] for i in seq) for seq in order)
    makespan = max((tau for _, tau in completions), default=0)
    return Schedule(schedule.assignment, order, completions, makespan)
