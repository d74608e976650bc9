"""Makespan scheduling of two-stage jobs on identical two-stage flowshops."""
from .core import (
    Instance,
    Job,
    Schedule,
    ShopStatus,
    evaluate_schedule,
    johnson_order,
    lower_bound,
    push_job,
    simulate_shop,
)
from .dp_asym import solve_dp2
from .dp_exact import dp1_value, solve_dp1
from .dual import dual_instance, dual_job, dualize_schedule
from .fptas import approx_solve, scale_instance
from .oracle import BudgetExceeded, oracle_single_shop, oracle_solve

__all__ = [
    "BudgetExceeded",
    "Instance",
    "Job",
    "Schedule",
    "ShopStatus",
    "approx_solve",
    "dp1_value",
    "dual_instance",
    "dual_job",
    "dualize_schedule",
    "evaluate_schedule",
    "johnson_order",
    "lower_bound",
    "oracle_single_shop",
    "oracle_solve",
    "push_job",
    "scale_instance",
    "simulate_shop",
    "solve_dp1",
    "solve_dp2",
]
