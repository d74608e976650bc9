"""(1 + eps)-approximation by scaling durations down and solving exactly.

Every duration is divided by ``K = eps * T_max / (n m)`` and floored, the
scaled instance is solved exactly, and its job partition is reused on the
original durations.  Floors are taken on cross-multiplied integers so the
guarantee holds in exact arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import Instance, Schedule, evaluate_schedule, simulate_shop
from .dp_asym import solve_dp2
from .dp_exact import solve_dp1

PRODUCT_LIMIT = 1 << 127


def parse_epsilon(value) -> Fraction:
    """Accept ``"num/den"``, an int or a Fraction; reject non-positive values."""
    eps = Fraction(value)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {value!r}")
    return eps


def select_solver(instance: Instance) -> str:
    """``"dp2"`` when the smaller of total R and total T is at most the square root of the larger."""
    lo, hi = sorted((instance.total_r, instance.total_t))
    return "dp2" if lo * lo <= hi else "dp1"


def scale_instance(instance: Instance, eps: Fraction) -> tuple[Instance, bool]:
    """Scaled instance, plus True when ``K <= 1`` and the original is returned unchanged."""
    n, m = instance.n, instance.m
    if n == 0:
        raise ValueError("cannot scale an empty instance")
    num, den = eps.numerator, eps.denominator
    t_max = max(instance.total_r, instance.total_t)
    if num * t_max <= n * m * den:
        return instance, True
    mult = n * m * den
    div = num * t_max
    scaled = []
    for r, t in instance.jobs:
        if max(r, t) * mult >= PRODUCT_LIMIT:
            raise OverflowError("scaling product exceeds 127 bits")
        scaled.append((r * mult // div, t * mult // div))
    return Instance(scaled, m), False


def solve_exact(instance: Instance, inner: str = "auto", **kwargs) -> Schedule:
    if inner == "auto":
        inner = select_solver(instance)
    if inner == "dp1":
        return solve_dp1(instance, **kwargs)
    if inner == "dp2":
        return solve_dp2(instance, **kwargs)
    raise ValueError(f"unknown solver {inner!r}")


def approx_solve(instance: Instance, eps, inner: str = "auto", **kwargs) -> Schedule:
    eps = parse_epsilon(eps)
    if instance.n == 0:
        return evaluate_schedule(instance, [])
    scaled, exact = scale_instance(instance, eps)
    if exact:
        return solve_exact(instance, inner, **kwargs)
    partition = solve_exact(scaled, inner, **kwargs).assignment
    return evaluate_schedule(instance, partition)


def inflate_bound_check(sequence: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Completion times of ``sequence`` before and after adding 1 to every duration.

    Raises AssertionError if the inflated time exceeds the original by more
    than ``len(sequence) + 1``.
    """
    if not sequence:
        raise ValueError("sequence must be nonempty")
    tau = simulate_shop(sequence)[1]
    tau_inflated = simulate_shop((r + 1, t + 1) for r, t in sequence)[1]
    if tau_inflated > tau + len(sequence) + 1:
        raise AssertionError(f"inflated completion {tau_inflated} exceeds {tau} + {len(sequence) + 1}")
    return tau, tau_inflated
