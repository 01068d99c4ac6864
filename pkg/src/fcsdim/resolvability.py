"""Codes, resolving/independence predicates and exhaustive dimension search.

Landmarks are tuples of vertex ids.  In vertex mode the coded objects are
the vertices, in edge mode the edges (in the graph's canonical edge order);
the landmarks are vertices in both modes.  Each call builds its own code
table, so vertex and edge searches never share any cached state.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from fcsdim import _backend
from fcsdim.graph import DistanceMatrix, Graph, GraphError, all_pairs_distances, edge_distance_table

VERTEX = "vertex"
EDGE = "edge"
MODES = (VERTEX, EDGE)

Landmarks = tuple[int, ...]
Code = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """No resolving set exists up to the requested size."""

    def __init__(self, result: "CertificationResult"):
        super().__init__(f"no {result.mode} resolving set of size <= {result.max_size}")
        self.result = result


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be 'vertex' or 'edge', not {mode!r}")


def _landmarks(landmarks: Sequence[int], n: int) -> Landmarks:
    out = tuple(int(x) for x in landmarks)
    if len(set(out)) != len(out):
        raise ValueError(f"landmarks contain duplicates: {out}")
    for x in out:
        if not 0 <= x < n:
            raise ValueError(f"landmark {x} is not a vertex id in [0, {n})")
    return out


def vertex_code(dm: DistanceMatrix, landmarks: Sequence[int], v: int) -> Code:
    if not landmarks:
        raise ValueError("landmarks must be nonempty")
    return tuple(int(dm.dist[x, v]) for x in landmarks)


def edge_code(dm: DistanceMatrix, landmarks: Sequence[int], e: tuple[int, int]) -> Code:
    if not landmarks:
        raise ValueError("landmarks must be nonempty")
    u, w = e
    return tuple(int(min(dm.dist[x, u], dm.dist[x, w])) for x in landmarks)


def code_table(g: Graph, dm: DistanceMatrix | None = None, mode: str = VERTEX) -> np.ndarray:
    """Objects x vertices table of distances; rejects disconnected graphs."""
    _check_mode(mode)
    dm = all_pairs_distances(g) if dm is None else dm
    if dm.n != g.vertex_count:
        raise ValueError("distance matrix does not belong to this graph")
    if not dm.connected:
        raise GraphError("graph is disconnected; codes are undefined")
    if mode == VERTEX:
        return np.ascontiguousarray(dm.dist, dtype=np.int32)
    return edge_distance_table(g, dm)


@dataclass(frozen=True)
class Resolution:
    resolving: bool
    pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.resolving


def _unresolved_pair(table: np.ndarray, cols: Sequence[int]) -> tuple[int, int] | None:
    nobj = table.shape[0]
    if nobj < 2:
        return None
    if not cols:
        return 0, 1
    seen: dict[tuple, int] = {}
    for o, row in enumerate(map(tuple, table[:, list(cols)].tolist())):
        prev = seen.setdefault(row, o)
        if prev != o:
            return prev, o
    return None


def is_resolving(g: Graph, landmarks: Sequence[int], mode: str = VERTEX,
                 dm: DistanceMatrix | None = None) -> Resolution:
    """Whether all codes are distinct; otherwise the first colliding pair.

    The pair holds vertex ids in vertex mode and edge indices in edge mode.
    """
    table = code_table(g, dm, mode)
    cols = _landmarks(landmarks, g.vertex_count)
    pair = _unresolved_pair(table, cols)
    return Resolution(pair is None, pair)


def is_independent(g: Graph, landmarks: Sequence[int]) -> bool:
    cols = _landmarks(landmarks, g.vertex_count)
    return not any(g.has_edge(x, y) for x, y in combinations(cols, 2))


def check_minimality(g: Graph, landmarks: Sequence[int], mode: str = VERTEX,
                     dm: DistanceMatrix | None = None) -> bool:
    """True iff no proper subset of a resolving set still resolves.

    Resolvability is monotone under supersets, so removing one landmark at a
    time covers every proper subset.
    """
    table = code_table(g, dm, mode)
    cols = _landmarks(landmarks, g.vertex_count)
    if _unresolved_pair(table, cols) is not None:
        raise ValueError("landmarks do not resolve the graph")
    return all(_unresolved_pair(table, cols[:t] + cols[t + 1:]) is not None
               for t in range(len(cols)))


@dataclass
class CertificationResult:
    mode: str
    dimension: int | None
    witness: Landmarks
    refuted_sizes: list[int]
    max_size: int
    searched: dict[int, tuple[int, int]] = field(default_factory=dict)
    counterexample_log: dict[int, list[tuple[Landmarks, tuple[int, int]]]] = field(default_factory=dict)
    backend: str = ""

    @property
    def exceeded(self) -> bool:
        return self.dimension is None


def _search_size(search, table: np.ndarray, size: int, prune: bool, threads: int):
    """Smallest resolving ``size``-subset over all first elements, plus counts.

    Counts are only complete (and thread-count invariant) when nothing is found.
    """
    firsts = range(table.shape[1] - size + 1)
    checked = pruned = 0
    if threads <= 1:
        for f in firsts:
            combo, c, p = search(table, size, f, prune)
            checked += c
            pruned += p
            if combo is not None:
                return combo, checked, pruned
        return None, checked, pruned
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(search, table, size, f, prune) for f in firsts]
        try:
            # a hit at first element f beats every later first element, so the
            # first hit in submission order is the lexicographic minimum
            for fut in futures:
                combo, c, p = fut.result()
                checked += c
                pruned += p
                if combo is not None:
                    return combo, checked, pruned
        finally:
            for fut in futures:
                fut.cancel()
    return None, checked, pruned


def find_resolving_set(g: Graph, size: int, mode: str = VERTEX, dm: DistanceMatrix | None = None,
                       *, threads: int | None = None, prune: bool = True,
                       backend: str | None = None) -> Landmarks | None:
    """Lexicographically smallest resolving set of exactly ``size`` landmarks."""
    table = code_table(g, dm, mode)
    if table.shape[0] <= 1:
        return tuple(range(size)) if size <= g.vertex_count else None
    combo, _, _ = _search_size(_backend.kernel(backend), table, size, prune, threads or 1)
    return combo


def certify_dimension(g: Graph, dm: DistanceMatrix | None = None, mode: str = VERTEX,
                      max_size: int | None = None, *, threads: int | None = None,
                      prune: bool = True, backend: str | None = None,
                      log: bool = False, log_limit: int | None = None,
                      raise_on_budget: bool = False) -> CertificationResult:
    """Exhaustively find the (edge) metric dimension, smallest sizes first.

    Every size below the answer is searched completely.  ``log`` keeps, for
    each refuted size, each candidate with one pair it leaves unresolved
    (at most ``log_limit`` per size).
    """
    _check_mode(mode)
    table = code_table(g, dm, mode)
    n = g.vertex_count
    max_size = n if max_size is None else int(max_size)
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    threads = os.cpu_count() or 1 if threads is None else max(1, int(threads))
    name = backend or _backend.BACKEND
    search = _backend.kernel(name)
    result = CertificationResult(mode, None, (), [], max_size, backend=name)

    if table.shape[0] <= 1:
        # a single object (K1, or K2 in edge mode) is resolved by any landmark
        result.dimension, result.witness = 1, (0,)
        return result

    for size in range(1, min(max_size, n) + 1):
        combo, checked, pruned = _search_size(search, table, size, prune, threads)
        if combo is not None:
            result.dimension, result.witness = size, tuple(int(x) for x in combo)
            return result
        result.refuted_sizes.append(size)
        result.searched[size] = (checked, pruned)
        if checked + pruned != comb(n, size):
            raise AssertionError(f"search at size {size} covered {checked + pruned} of {comb(n, size)} subsets")
        if log:
            entries = []
            for cand in combinations(range(n), size):
                if log_limit is not None and len(entries) >= log_limit:
                    break
                entries.append((cand, _unresolved_pair(table, cand)))
            result.counterexample_log[size] = entries
    if raise_on_budget:
        raise BudgetExceeded(result)
    return result
