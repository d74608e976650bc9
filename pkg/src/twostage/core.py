"""Jobs, instances, schedules and single-flowshop simulation.

A two-stage job ``(r, t)`` runs its R-operation on the R-processor of a
flowshop, then its T-operation on the T-processor of the same flowshop.
Given the job order on one flowshop, the R-processor never idles and each
T-operation starts as early as possible, so the whole timeline is fixed by
the order alone.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

MAX_TIME = (1 << 63) - 1


class Job(NamedTuple):
    r: int
    t: int


class ShopStatus(NamedTuple):
    """R-processor completion ``rho`` and lag ``delta`` of the T-processor behind it."""

    rho: int
    delta: int

    @property
    def tau(self) -> int:
        return self.rho + self.delta


def _check_time(value: int, what: str) -> int:
    if value > MAX_TIME:
        raise OverflowError(f"{what} exceeds the 63-bit time range")
    return value


@dataclass(frozen=True)
class Instance:
    jobs: tuple[Job, ...]
    m: int

    def __init__(self, jobs: Iterable[Sequence[int]], m: int):
        parsed = []
        for i, job in enumerate(jobs):
            r, t = job
            for name, value in (("r", r), ("t", t)):
                if isinstance(value, bool) or not isinstance(value, int):
                    raise TypeError(f"jobs[{i}].{name} must be an integer")
                if value < 0:
                    raise ValueError(f"jobs[{i}].{name} must be >= 0")
                _check_time(value, f"jobs[{i}].{name}")
            parsed.append(Job(r, t))
        if isinstance(m, bool) or not isinstance(m, int):
            raise TypeError("m must be an integer")
        if m < 1:
            raise ValueError("m must be >= 1")
        object.__setattr__(self, "jobs", tuple(parsed))
        object.__setattr__(self, "m", m)
        _check_time(self.total_r, "sum of r")
        _check_time(self.total_t, "sum of t")

    @property
    def n(self) -> int:
        return len(self.jobs)

    @property
    def total_r(self) -> int:
        return sum(j.r for j in self.jobs)

    @property
    def total_t(self) -> int:
        return sum(j.t for j in self.jobs)

    def check_horizon(self) -> None:
        """Raise OverflowError if some completion time could leave 63 bits."""
        _check_time(self.total_r + self.total_t, "sum of r and t")


@dataclass(frozen=True)
class Schedule:
    assignment: tuple[int, ...]
    order: tuple[tuple[int, ...], ...]
    completions: tuple[tuple[int, int], ...]
    makespan: int

    @property
    def m(self) -> int:
        return len(self.order)


def johnson_key(index: int, job: Job) -> tuple:
    if job.r <= job.t:
        return (0, job.r, index)
    return (1, -job.t, index)


def johnson_order(jobs: Iterable[tuple[int, Job]]) -> list[int]:
    """Return job indices in Johnson's order.

    Jobs with ``r <= t`` come first by nondecreasing ``r``, then jobs with
    ``r > t`` by nonincreasing ``t``.  Ties go to the smaller index, which
    makes the order of any subset the restriction of the full order.
    """
    return [i for i, _ in sorted(jobs, key=lambda item: johnson_key(item[0], Job(*item[1])))]


def push_job(status: tuple[int, int], job: Sequence[int]) -> ShopStatus:
    rho, delta = status
    r, t = job
    return ShopStatus(
        _check_time(rho + r, "rho"),
        _check_time(max(r, delta) + t - r, "delta"),
    )


def simulate_shop(sequence: Iterable[Sequence[int]]) -> tuple[int, int]:
    """Final ``(rho, tau)`` of one flowshop running ``sequence`` in the given order."""
    rho = 0
    tau = 0
    for r, t in sequence:
        rho += r
        tau = max(rho, tau) + t
    _check_time(rho, "rho")
    _check_time(tau, "tau")
    return rho, tau


def evaluate_schedule(instance: Instance, assignment: Sequence[int]) -> Schedule:
    """Build the schedule that runs each shop's jobs in Johnson's order."""
    m = instance.m
    if len(assignment) != instance.n:
        raise ValueError(f"assignment has {len(assignment)} entries for {instance.n} jobs")
    buckets: list[list[tuple[int, Job]]] = [[] for _ in range(m)]
    for i, shop in enumerate(assignment):
        if isinstance(shop, bool) or not isinstance(shop, int) or not 0 <= shop < m:
            raise ValueError(f"assignment[{i}] = {shop!r} is not a shop index in 0..{m - 1}")
        buckets[shop].append((i, instance.jobs[i]))
    order = tuple(tuple(johnson_order(bucket)) for bucket in buckets)
    completions = tuple(simulate_shop(instance.jobs[i] for i in seq) for seq in order)
    makespan = max((tau for _, tau in completions), default=0)
    return Schedule(tuple(assignment), order, completions, makespan)


def lower_bound(instance: Instance) -> int:
    """Makespan lower bound from total R-work, total T-work and the longest job."""
    m = instance.m
    return max(
        -(-instance.total_r // m),
        -(-instance.total_t // m),
        max((j.r + j.t for j in instance.jobs), default=0),
    )
