"""Benchmark grid: dp1, dp2 and the approximation on generated instances.

Grid document (every list optional; an empty list gives an empty report)::

    {"n": [8, 12], "m": [2], "ranges": [[2, 200], [20, 20]],
     "zero_r": "0", "seeds": [1, 2], "eps": "1/2", "timeout": 30}

Each cell is one (n, m, range, seed) combination.
"""
from __future__ import annotations

import itertools
import time
from fractions import Fraction

from ._layers import DpStats, SolverTimeout
from .dp_asym import solve_dp2
from .dp_exact import solve_dp1
from .fptas import approx_solve
from .gen import GenSpec, generate

COLUMNS = ["n", "m", "r_max", "t_max", "seed", "R0", "T0",
           "dp1_makespan", "dp1_peak", "dp1_s", "dp2_makespan", "dp2_peak", "dp2_s",
           "approx_makespan", "approx_s"]


def grid_cells(grid: dict) -> list[dict]:
    return [
        {"n": n, "m": m, "r_max": rr[0], "t_max": rr[1], "seed": seed}
        for n, m, rr, seed in itertools.product(
            grid.get("n", [10]), grid.get("m", [2]), grid.get("ranges", [[10, 10]]), grid.get("seeds", [0])
        )
    ]


def _timed(fn, timeout):
    start = time.monotonic()
    deadline = None if timeout is None else start + timeout
    try:
        result = fn(deadline)
    except SolverTimeout:
        return None, time.monotonic() - start
    return result, time.monotonic() - start


def run_cell(cell: dict, zero_r: Fraction, eps: Fraction, timeout: float | None) -> dict:
    inst = generate(GenSpec(cell["n"], cell["m"], cell["r_max"], cell["t_max"], zero_r, cell["seed"]))
    row = dict(cell, R0=inst.total_r, T0=inst.total_t)
    for name, solver in (("dp1", solve_dp1), ("dp2", solve_dp2)):
        stats = DpStats()
        sched, secs = _timed(lambda dl: solver(inst, stats=stats, deadline=dl), timeout)
        row[f"{name}_makespan"] = "timeout" if sched is None else sched.makespan
        row[f"{name}_peak"] = stats.peak_states
        row[f"{name}_s"] = round(secs, 4)
    sched, secs = _timed(lambda dl: approx_solve(inst, eps, deadline=dl), timeout)
    row["approx_makespan"] = "timeout" if sched is None else sched.makespan
    row["approx_s"] = round(secs, 4)
    if "timeout" not in (row["dp1_makespan"], row["dp2_makespan"]):
        assert row["dp1_makespan"] == row["dp2_makespan"], f"dp1/dp2 disagree on {cell}"
    return row


def bench(grid: dict) -> list[dict]:
    zero_r = Fraction(grid.get("zero_r", 0))
    eps = Fraction(grid.get("eps", "1/2"))
    timeout = grid.get("timeout")
    return [run_cell(cell, zero_r, eps, timeout) for cell in grid_cells(grid)]


def format_table(rows: list[dict]) -> str:
    if not rows:
        return ""
    table = [COLUMNS] + [[str(row[c]) for c in COLUMNS] for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(COLUMNS))]
    return "\n".join("  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in table) + "\n"
