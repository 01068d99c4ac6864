"""Simple undirected graphs and exact hop-distance oracles."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

#: Distance reported between vertices in different components.
UNREACHABLE = -1


class GraphError(ValueError):
    """Raised for malformed graph input (loops, out-of-range endpoints)."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return v in self.adjacency[u]

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge {u, v} in the canonical edge list."""
        key = (u, v) if u < v else (v, u)
        idx = self._edge_positions.get(key)
        if idx is None:
            raise KeyError(f"no edge {key}")
        return idx

    @cached_property
    def _edge_positions(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}


def build_graph(vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical simple graph; duplicate pairs collapse to one edge."""
    if vertex_count < 0:
        raise GraphError("vertex_count must be non-negative")
    pairs = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {vertex_count})")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        pairs.add((u, v) if u < v else (v, u))
    nbrs: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in pairs:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(
        vertex_count=vertex_count,
        adjacency=tuple(tuple(sorted(n)) for n in nbrs),
        edges=tuple(sorted(pairs)),
    )


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances; ``dist[u, v] == UNREACHABLE`` across components."""

    dist: np.ndarray

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def __getitem__(self, key):
        return self.dist[key]

    @property
    def connected(self) -> bool:
        return bool((self.dist != UNREACHABLE).all())

    @property
    def diameter(self) -> int:
        return int(self.dist.max()) if self.n else 0


def _bfs(g: Graph, source: int, row: np.ndarray) -> None:
    row[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        dx = row[x] + 1
        for y in adj[x]:
            if row[y] == UNREACHABLE:
                row[y] = dx
                queue.append(y)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    dist = np.full((g.vertex_count, g.vertex_count), UNREACHABLE, dtype=np.int32)
    for s in range(g.vertex_count):
        _bfs(g, s, dist[s])
    dist.setflags(write=False)
    return DistanceMatrix(dist)


def vertex_edge_distance(dm: DistanceMatrix, v: int, e: Sequence[int]) -> int:
    return int(min(dm.dist[v, e[0]], dm.dist[v, e[1]]))


def edge_distance_table(g: Graph, dm: DistanceMatrix) -> np.ndarray:
    """``table[k, v]`` is the distance from vertex ``v`` to the k-th canonical edge."""
    if not g.edges:
        return np.zeros((0, g.vertex_count), dtype=np.int32)
    ends = np.asarray(g.edges, dtype=np.intp)
    table = np.minimum(dm.dist[ends[:, 0]], dm.dist[ends[:, 1]])
    return np.ascontiguousarray(table, dtype=np.int32)


def is_connected(g: Graph) -> bool:
    if g.vertex_count < 1:
        raise GraphError("connectivity is undefined for the empty graph")
    row = np.full(g.vertex_count, UNREACHABLE, dtype=np.int64)
    _bfs(g, 0, row)
    return bool((row != UNREACHABLE).all())


@dataclass(frozen=True)
class DegreeProfile:
    counts: dict[int, int]

    @property
    def min_degree(self) -> int:
        return min(self.counts)

    @property
    def max_degree(self) -> int:
        return max(self.counts)


def degree_profile(g: Graph) -> DegreeProfile:
    return DegreeProfile(dict(sorted(Counter(len(a) for a in g.adjacency).items())))


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    BFS from every vertex; a non-tree edge between x and y closes a walk of
    length depth[x] + depth[y] + 1 whose minimum over all roots is the girth.
    """
    best = None
    n = g.vertex_count
    for s in range(n):
        depth = [-1] * n
        parent = [-1] * n
        depth[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * depth[x] + 1 >= best:
                break
            for y in g.adjacency[x]:
                if depth[y] == -1:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cyc = depth[x] + depth[y] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best
