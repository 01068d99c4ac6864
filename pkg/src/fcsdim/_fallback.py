"""Pure numpy implementation of the subset search kernel.

Same contract as the compiled ``search_first``.  For each prefix of
``size - 1`` columns the objects are grouped once, then every possible last
column is tested in one vectorized sort.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np


def _classes(table: np.ndarray, cols) -> np.ndarray:
    if not cols:
        return np.zeros(table.shape[0], dtype=np.int64)
    _, inv = np.unique(table[:, list(cols)], axis=0, return_inverse=True)
    return inv.reshape(-1).astype(np.int64)


def _first_collision(cls: np.ndarray) -> tuple[int, int] | None:
    """Lowest-index object sharing a class with an earlier one, and that earlier one."""
    _, first_seen = np.unique(cls, return_index=True)
    owner = np.empty(int(cls.max()) + 1, dtype=np.int64)
    owner[cls[first_seen]] = first_seen
    dup = np.flatnonzero(owner[cls] != np.arange(cls.size))
    if dup.size == 0:
        return None
    y = int(dup[0])
    return int(owner[cls[y]]), y


def search_first(table: np.ndarray, size: int, first: int, prune: bool = False):
    table = np.ascontiguousarray(table, dtype=np.int32)
    nobj, ncand = table.shape
    if size < 1 or first < 0 or first + size > ncand:
        return None, 0, 0
    base = int(table.max()) + 1 if table.size else 1
    if size == 1:
        ok = np.unique(table[:, first]).size == nobj
        return ((first,) if ok else None), 1, 0

    checked = pruned = 0
    for mid in combinations(range(first + 1, ncand - 1), size - 2):
        prefix = (first, *mid)
        last = np.arange(prefix[-1] + 1, ncand)
        if last.size == 0:
            continue
        cls = _classes(table, prefix)
        skipped = np.zeros(last.size, dtype=bool)
        if prune:
            pair = _first_collision(cls)
            if pair is not None:
                x, y = pair
                skipped = table[x, last] == table[y, last]
        tested = last[~skipped]
        if tested.size:
            keys = np.sort(cls[:, None] * base + table[:, tested], axis=0)
            distinct = ~np.any(keys[1:] == keys[:-1], axis=0)
            hits = np.flatnonzero(distinct)
        else:
            hits = np.empty(0, dtype=np.intp)
        if hits.size:
            # counters stop at the hit, as in the compiled sequential scan
            hit_col = tested[hits[0]]
            checked += int(hits[0]) + 1
            pruned += int(skipped[last < hit_col].sum())
            return (*prefix, int(hit_col)), checked, pruned
        checked += int(tested.size)
        pruned += int(skipped.sum())
    return None, checked, pruned
