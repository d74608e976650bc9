"""JSON documents for instances and solver results.

Instance::

    {"m": 2, "jobs": [[1, 2], [2, 1]]}

Result::

    {"makespan": 3, "assignment": [1, 0], "shops": [{"order": [1], "rho": 2, "tau": 3}, ...],
     "algo": "dp1", "optimal": true, "ratio_bound": null}
"""
from __future__ import annotations

import json
from fractions import Fraction

from .core import Instance, Schedule


class FormatError(ValueError):
    pass


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def instance_from_dict(doc) -> Instance:
    if not isinstance(doc, dict):
        raise FormatError("instance must be a JSON object")
    if "m" not in doc:
        raise FormatError("missing field 'm'")
    if "jobs" not in doc:
        raise FormatError("missing field 'jobs'")
    m, jobs = doc["m"], doc["jobs"]
    if not _is_int(m):
        raise FormatError("m must be an integer")
    if m < 1:
        raise FormatError("m must be ≥ 1")
    if not isinstance(jobs, list):
        raise FormatError("jobs must be a list")
    for i, job in enumerate(jobs):
        if not isinstance(job, list) or len(job) != 2:
            raise FormatError(f"jobs[{i}] must be a pair [r, t]")
        for name, value in zip("rt", job):
            if not _is_int(value):
                raise FormatError(f"jobs[{i}].{name} must be an integer")
    try:
        return Instance(jobs, m)
    except (ValueError, OverflowError) as exc:
        raise FormatError(str(exc)) from None


def load_instance(text: str) -> Instance:
    return instance_from_dict(parse_json(text))


def save_instance(instance: Instance) -> str:
    return json.dumps({"m": instance.m, "jobs": [list(j) for j in instance.jobs]})


def result_to_dict(
    schedule: Schedule | None,
    *,
    algo: str,
    optimal: bool,
    ratio_bound: Fraction | None = None,
    makespan: int | None = None,
) -> dict:
    """Result document; pass ``makespan`` alone (``schedule=None``) for value-only runs."""
    if schedule is None:
        if makespan is None:
            raise ValueError("need a schedule or a makespan")
        assignment = shops = None
    else:
        makespan = schedule.makespan
        assignment = list(schedule.assignment)
        shops = [
            {"order": list(seq), "rho": rho, "tau": tau}
            for seq, (rho, tau) in zip(schedule.order, schedule.completions)
        ]
    return {
        "makespan": makespan,
        "assignment": assignment,
        "shops": shops,
        "algo": algo,
        "optimal": optimal,
        "ratio_bound": None if ratio_bound is None else str(ratio_bound),
    }


def schedule_from_dict(doc: dict) -> Schedule:
    if doc.get("shops") is None or doc.get("assignment") is None:
        raise FormatError("result document carries no schedule")
    shops = doc["shops"]
    return Schedule(
        tuple(doc["assignment"]),
        tuple(tuple(s["order"]) for s in shops),
        tuple((s["rho"], s["tau"]) for s in shops),
        doc["makespan"],
    )


def dump_result(doc: dict) -> str:
    return json.dumps(doc, sort_keys=False) + "\n"
