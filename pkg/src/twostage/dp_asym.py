"""Exact dynamic program for instances whose total T-time dwarfs total R-time.

Shops are kept sorted by nonincreasing R-completion, which bounds the
R-completion of the shop at position ``h`` by ``R0 // h``.  Once a shop's
T-completion reaches ``R0`` no later R-operation can delay it, so only its
T-completion matters from then on; such a shop is stored as a saturated pair
``(R0 // h + 1, tau - R0)``.  Lags of unsaturated shops stay below ``R0``,
which keeps the state space small when ``R0`` is small.  Instances with
``R0 > T0`` are solved through their dual.
"""
from __future__ import annotations

from typing import NamedTuple, Sequence

from ._layers import DpStats, backtrack, check_deadline, expand_parallel
from .core import Instance, Schedule, ShopStatus, evaluate_schedule, johnson_order
from .dual import dual_instance, dualize_schedule


class CappedPair(NamedTuple):
    rho_code: int
    delta_code: int


def saturation_code(h: int, r0: int) -> int:
    return r0 // h + 1


def encode_pair(status: Sequence[int], h: int, r0: int) -> CappedPair:
    """Encode the real status of the shop at 1-based position ``h``."""
    rho, delta = status
    if rho > r0 // h:
        raise ValueError(f"rho={rho} at position {h} breaks the bound rho <= {r0} // {h}")
    if rho + delta < r0:
        return CappedPair(rho, delta)
    return CappedPair(r0 // h + 1, rho + delta - r0)


def decode_pair(pair: Sequence[int], h: int, r0: int, rho_actual: int) -> ShopStatus:
    """Real status behind ``pair``; ``rho_actual`` is only used for saturated pairs."""
    code, dcode = pair
    if code == r0 // h + 1:
        return ShopStatus(rho_actual, r0 + dcode - rho_actual)
    return ShopStatus(code, dcode)


def initial_layer(m: int, r0: int) -> dict:
    key = [0]
    for h in range(2, m + 1):
        key.extend(encode_pair((0, 0), h, r0))
    return {tuple(key): (0, 0, None, None, (0,) * (m - 1))}


def decode_state(key: tuple, entry: tuple, r0: int) -> list[ShopStatus]:
    """Real statuses of all shops, in position order."""
    statuses = [ShopStatus(key[0], entry[0])]
    rho_actual = entry[4]
    for h in range(2, len(rho_actual) + 2):
        pair = key[2 * h - 3], key[2 * h - 2]
        statuses.append(decode_pair(pair, h, r0, rho_actual[h - 2]))
    return statuses


def expand_layer_canonical(
    layer: dict,
    job: Sequence[int],
    r0_k: int,
    r0: int,
    *,
    threads: int = 1,
) -> dict:
    """Place ``job`` on every shop of every canonical state in ``layer``.

    ``r0_k`` is the R-time already scheduled and ``r0`` the instance total.
    """
    if not layer:
        return {}
    r, t = job
    m = len(next(iter(layer.values()))[4]) + 1
    sentinels = [0, 0] + [saturation_code(h, r0) for h in range(2, m + 1)]
    positions = range(m)

    def expand_chunk(items: list) -> dict:
        out: dict = {}
        get = out.get
        for key, entry in items:
            rhos = [key[0]]
            taus = [key[0] + entry[0]]
            rho_actual = entry[4]
            for h in range(2, m + 1):
                code, dcode = key[2 * h - 3], key[2 * h - 2]
                if code == sentinels[h]:
                    rhos.append(rho_actual[h - 2])
                    taus.append(r0 + dcode)
                else:
                    rhos.append(code)
                    taus.append(code + dcode)
            if sum(rhos) != r0_k:
                raise RuntimeError(f"state {key} does not conserve R-work {r0_k}")
            for d in positions:
                nr = rhos.copy()
                nt = taus.copy()
                nr[d] += r
                nt[d] = (nr[d] if nr[d] > nt[d] else nt[d]) + t
                # stable: shops with equal rho keep their relative order
                perm = tuple(sorted(positions, key=nr.__getitem__, reverse=True))
                rho1 = nr[perm[0]]
                flat = [rho1]
                actual = []
                for h in range(2, m + 1):
                    src = perm[h - 1]
                    rho, tau = nr[src], nt[src]
                    if rho > r0 // h:
                        raise RuntimeError(f"canonical order broke rho <= R0/h at position {h}")
                    if tau < r0:
                        flat.append(rho)
                        flat.append(tau - rho)
                    else:
                        flat.append(sentinels[h])
                        flat.append(tau - r0)
                    actual.append(rho)
                new_key = tuple(flat)
                cand = (nt[perm[0]] - rho1, perm.index(d), key, perm, tuple(actual))
                cur = get(new_key)
                if cur is None or cand[:3] < cur[:3]:
                    out[new_key] = cand
        return out

    return expand_parallel(layer, expand_chunk, threads)


def final_makespan(key: tuple, entry: tuple, r0: int) -> int:
    return max(s.tau for s in decode_state(key, entry, r0))


def _run(instance: Instance, threads: int, stats: DpStats | None, deadline: float | None):
    instance.check_horizon()
    order = johnson_order(enumerate(instance.jobs))
    r0 = instance.total_r
    layer = initial_layer(instance.m, r0)
    layers = [layer]
    if stats is not None:
        stats.layer_sizes.append(len(layer))
    r0_k = 0
    for i in order:
        check_deadline(deadline)
        job = instance.jobs[i]
        layer = expand_layer_canonical(layer, job, r0_k, r0, threads=threads)
        r0_k += job.r
        layers.append(layer)
        if stats is not None:
            stats.layer_sizes.append(len(layer))
    best_key = min(layer, key=lambda key: (final_makespan(key, layer[key], r0), key))
    return order, layers, best_key


def _solve_direct(instance: Instance, threads: int, stats, deadline) -> Schedule:
    order, layers, key = _run(instance, threads, stats, deadline)
    shops = backtrack(layers, key, instance.m)
    assignment = [0] * instance.n
    for pos, i in enumerate(order):
        assignment[i] = shops[pos]
    return evaluate_schedule(instance, assignment)


def solve_dp2(
    instance: Instance,
    *,
    threads: int = 1,
    stats: DpStats | None = None,
    deadline: float | None = None,
) -> Schedule:
    """Optimal schedule; runs on the dual instance when total R exceeds total T."""
    if instance.n == 0:
        return evaluate_schedule(instance, [])
    if instance.total_r <= instance.total_t:
        return _solve_direct(instance, threads, stats, deadline)
    dual = dual_instance(instance)
    return dualize_schedule(instance, _solve_direct(dual, threads, stats, deadline))
