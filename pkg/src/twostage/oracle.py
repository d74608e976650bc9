"""Brute-force optima for small instances.

Nothing here touches the dynamic programs; these are the reference answers
the solvers are checked against.
"""
from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .core import Instance, Schedule, evaluate_schedule, johnson_key, simulate_shop

DEFAULT_BUDGET = 10**8
SINGLE_SHOP_LIMIT = 8


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} assignments, budget is {budget}")
        self.required = required
        self.budget = budget


def _assignments(n: int, m: int, prune: bool):
    """Yield assignments in lexicographic order.

    With ``prune``, job ``i`` only opens shop ``k`` if shops ``0..k-1`` are
    already used, since relabeling identical shops changes nothing.
    """
    a = [0] * n

    def rec(i: int, used: int):
        if i == n:
            yield a
            return
        top = min(m, used + 1) if prune else m
        for s in range(top):
            a[i] = s
            yield from rec(i + 1, max(used, s + 1))

    yield from rec(0, 0)


def oracle_solve(instance: Instance, limit: int = DEFAULT_BUDGET, *, prune: bool = True) -> Schedule:
    """Minimum-makespan schedule by exhaustive search over assignments.

    Returns the lexicographically smallest optimal assignment.
    """
    n, m = instance.n, instance.m
    required = m**n
    if required > limit:
        raise BudgetExceeded(required, limit)
    jobs = instance.jobs
    # every shop runs its jobs in Johnson order, i.e. in this global order
    ranked = sorted(range(n), key=lambda i: johnson_key(i, jobs[i]))
    best = None
    best_assignment: list[int] = []
    for a in _assignments(n, m, prune):
        rho = [0] * m
        tau = [0] * m
        for i in ranked:
            s = a[i]
            r, t = jobs[i]
            rho[s] += r
            tau[s] = max(rho[s], tau[s]) + t
        span = max(tau)
        if best is None or span < best:
            best = span
            best_assignment = a.copy()
    return evaluate_schedule(instance, best_assignment)


def oracle_single_shop(jobs: Sequence[Sequence[int]]) -> int:
    """Smallest completion time of one flowshop over every job order."""
    if len(jobs) > SINGLE_SHOP_LIMIT:
        raise ValueError(f"at most {SINGLE_SHOP_LIMIT} jobs, got {len(jobs)}")
    return min(simulate_shop(p)[1] for p in permutations(jobs))
