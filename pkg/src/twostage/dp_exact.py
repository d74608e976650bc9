"""Exact layered dynamic program over shop statuses.

Jobs are processed in Johnson's order, so every shop receives its jobs in
Johnson's order and its timeline is fixed by the prefix it has seen.  State
after ``k`` jobs is the tuple of ``(rho, delta)`` statuses of all shops.  The
R-work of the first shop is implied by the others (no R-processor idles), so
the key holds shops ``2..m`` only and each key remembers the smallest lag of
shop 1 that reaches it.
"""
from __future__ import annotations

from typing import Sequence

from ._layers import DpStats, backtrack, check_deadline, expand_parallel
from .core import Instance, Schedule, evaluate_schedule, johnson_order


def initial_layer(m: int) -> dict:
    return {(0,) * (2 * m - 2): (0, 0, None, None)}


def _shop_count(layer: dict) -> int:
    return len(next(iter(layer))) // 2 + 1


def expand_layer(
    layer: dict,
    job: Sequence[int],
    r0_k: int,
    *,
    canonical: bool = False,
    threads: int = 1,
) -> dict:
    """Place ``job`` on every shop of every state in ``layer``.

    ``r0_k`` is the total R-time of the jobs already in ``layer``.  With
    ``canonical`` the shops are re-sorted by decreasing ``(rho, delta)`` after
    each push, which merges states that differ only by a shop relabeling.
    """
    if not layer:
        return {}
    m = _shop_count(layer)
    r, t = job

    def expand_chunk(items: list) -> dict:
        out: dict = {}
        get = out.get
        for key, entry in items:
            delta1 = entry[0]
            rho1 = r0_k - sum(key[0::2])
            base = [rho1, delta1, *key]
            for d in range(m):
                rho, delta = base[2 * d], base[2 * d + 1]
                nxt = base.copy()
                nxt[2 * d] = rho + r
                nxt[2 * d + 1] = (r if r > delta else delta) + t - r
                if canonical:
                    perm = tuple(sorted(range(m), key=lambda h: (-nxt[2 * h], -nxt[2 * h + 1])))
                    pos = perm.index(d)
                    flat = []
                    for h in perm:
                        flat.append(nxt[2 * h])
                        flat.append(nxt[2 * h + 1])
                    new_delta1 = flat[1]
                    new_key = tuple(flat[2:])
                    cand = (new_delta1, pos, key, perm)
                else:
                    new_key = tuple(nxt[2:])
                    cand = (nxt[1], d, key, None)
                cur = get(new_key)
                if cur is None or cand[:3] < cur[:3]:
                    out[new_key] = cand
        return out

    return expand_parallel(layer, expand_chunk, threads)


def final_makespan(key: tuple, entry: tuple, r0: int) -> int:
    rho1 = r0 - sum(key[0::2])
    best = rho1 + entry[0]
    for h in range(0, len(key), 2):
        tau = key[h] + key[h + 1]
        if tau > best:
            best = tau
    return best


def _run(instance: Instance, canonical: bool, threads: int, keep_layers: bool,
         stats: DpStats | None, deadline: float | None):
    instance.check_horizon()
    order = johnson_order(enumerate(instance.jobs))
    layer = initial_layer(instance.m)
    layers = [layer] if keep_layers else None
    if stats is not None:
        stats.layer_sizes.append(len(layer))
    r0_k = 0
    for i in order:
        check_deadline(deadline)
        job = instance.jobs[i]
        layer = expand_layer(layer, job, r0_k, canonical=canonical, threads=threads)
        r0_k += job.r
        if keep_layers:
            layers.append(layer)
        if stats is not None:
            stats.layer_sizes.append(len(layer))
    best_key = min(layer, key=lambda key: (final_makespan(key, layer[key], r0_k), key))
    return order, layers, best_key, final_makespan(best_key, layer[best_key], r0_k)


def solve_dp1(
    instance: Instance,
    *,
    canonical: bool = False,
    threads: int = 1,
    stats: DpStats | None = None,
    deadline: float | None = None,
) -> Schedule:
    """Optimal schedule by the full layered program, with backtracking."""
    if instance.n == 0:
        return evaluate_schedule(instance, [])
    order, layers, key, _ = _run(instance, canonical, threads, True, stats, deadline)
    shops = backtrack(layers, key, instance.m)
    assignment = [0] * instance.n
    for pos, i in enumerate(order):
        assignment[i] = shops[pos]
    return evaluate_schedule(instance, assignment)


def dp1_value(
    instance: Instance,
    *,
    canonical: bool = False,
    threads: int = 1,
    stats: DpStats | None = None,
    deadline: float | None = None,
) -> int:
    """Optimal makespan only; keeps just the current layer in memory."""
    if instance.n == 0:
        return 0
    return _run(instance, canonical, threads, False, stats, deadline)[3]

