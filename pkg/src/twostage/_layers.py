"""Layer bookkeeping shared by the two exact dynamic programs.

A layer maps a state key to an entry ``(delta1, d, pred, perm, ...)``:
``delta1`` is the lag of the first shop, ``d`` the (post-sort) position that
received the newest job, ``pred`` the key of the predecessor state and
``perm`` the position permutation applied after the push (``perm[i]`` is the
pre-sort position now sitting at ``i``; ``None`` means identity).  Extra
fields after ``perm`` are solver specific.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable


class SolverTimeout(RuntimeError):
    pass


@dataclass
class DpStats:
    layer_sizes: list[int] = field(default_factory=list)

    @property
    def peak_states(self) -> int:
        return max(self.layer_sizes, default=0)

    @property
    def total_states(self) -> int:
        return sum(self.layer_sizes)


def merge_entry(layer: dict, key: tuple, entry: tuple) -> None:
    """Keep the smaller of two entries for one key: by delta1, then d, then pred key."""
    cur = layer.get(key)
    if cur is None or entry[:3] < cur[:3]:
        layer[key] = entry


def merge_layers(parts: Iterable[dict]) -> dict:
    merged: dict = {}
    for part in parts:
        if not merged:
            merged = part
            continue
        for key, entry in part.items():
            merge_entry(merged, key, entry)
    return merged


def expand_parallel(layer: dict, expand_chunk: Callable[[list], dict], threads: int) -> dict:
    """Split ``layer`` into chunks, expand each, and min-merge the results.

    The merge is order independent, so the result never depends on ``threads``.
    """
    items = list(layer.items())
    if threads <= 1 or len(items) < 2 * threads:
        return expand_chunk(items)
    size = -(-len(items) // threads)
    chunks = [items[i:i + size] for i in range(0, len(items), size)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return merge_layers(list(pool.map(expand_chunk, chunks)))


def check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise SolverTimeout("solver exceeded its time limit")


def backtrack(layers: list[dict], key: tuple, m: int) -> list[int]:
    """Recover, for each processed job, the shop it went to.

    Shop labels are the final positions; they are carried backwards through
    every recorded permutation.
    """
    labels = list(range(m))
    shops = [0] * (len(layers) - 1)
    for k in range(len(layers) - 1, 0, -1):
        entry = layers[k][key]
        d, pred, perm = entry[1], entry[2], entry[3]
        shops[k - 1] = labels[d]
        if perm is not None:
            old = [0] * m
            for i, p in enumerate(perm):
                old[p] = labels[i]
            labels = old
        key = pred
    return shops
