"""Labeled graph families: the coronoid/starphene composite FCS(a, b, c) and
the path, cycle and complete baselines.

Vertex labels are ``<family>:<d>`` strings such as ``p1:1`` or ``u3:3``.
How the FCS edge set was pinned down is documented in CONSTRUCTION_NOTES.md
at the repository root.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from fcsdim.graph import (
    Graph,
    build_graph,
    degree_profile,
    girth,
    is_connected,
)

#: Enumeration order of the FCS vertex families; fixes VertexIds.
FCS_FAMILIES = (
    "p1", "p2", "q1", "q2", "r1", "r2",
    "s1", "s2", "t1", "t2", "u1", "u2",
    "p3", "q3", "r3", "s3", "t3", "u3",
)

# Family -> (arm parameter, offset): the family holds d = 1 .. 2*param - offset.
# "printed" follows the vertex-set ranges literally; "benzenoid" lets q2/t2
# follow b and r2/u2 follow c so that opposite sides of the coronoid match
# and the graph embeds in the hexagonal lattice (see CONSTRUCTION_NOTES.md).
_PRINTED_RANGE = {
    "p1": ("a", 1), "p2": ("a", 1),
    "q1": ("c", 1), "q2": ("c", 1),
    "r1": ("b", 1), "r2": ("b", 1),
    "s1": ("a", 3), "s2": ("a", 3),
    "t1": ("c", 3), "t2": ("c", 3),
    "u1": ("b", 3), "u2": ("b", 3),
    "p3": ("a", 5), "s3": ("a", 5),
    "q3": ("c", 5), "t3": ("c", 5),
    "r3": ("b", 5), "u3": ("b", 5),
}
LAYOUTS = {
    "printed": _PRINTED_RANGE,
    "benzenoid": {**_PRINTED_RANGE,
                  "q2": ("b", 1), "t2": ("b", 3), "r2": ("c", 1), "u2": ("c", 3)},
}
DEFAULT_LAYOUT = "benzenoid"

# Baseline families use a single generic token.
BASELINE_FAMILY = "v"

_LABEL_RE = re.compile(r"^([a-z][0-9]?):([0-9]+)$")


class ParameterError(ValueError):
    pass


class LabelError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class VertexLabel:
    family: str
    d: int

    def __str__(self) -> str:
        return format_label(self)


def format_label(label: VertexLabel) -> str:
    return f"{label.family}:{label.d}"


def parse_label(text: str) -> VertexLabel:
    """Parse ``<family>:<d>``; only the syntax and the family token are checked."""
    m = _LABEL_RE.match(text)
    if m is None:
        raise LabelError(f"malformed label {text!r}")
    family, d = m.group(1), int(m.group(2))
    if family not in _PRINTED_RANGE and family != BASELINE_FAMILY:
        raise LabelError(f"unknown vertex family {family!r} in label {text!r}")
    if d < 1:
        raise LabelError(f"label index must be positive in {text!r}")
    return VertexLabel(family, d)


@dataclass(frozen=True)
class FcsParams:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 4:
                raise ParameterError(f"parameters must be ≥ 4 (got {name}={value!r})")

    @property
    def i(self) -> int:
        return 2 * self.a - 1

    @property
    def j(self) -> int:
        return 2 * self.c - 1

    @property
    def k(self) -> int:
        return 2 * self.b - 1

    def family_size(self, family: str, layout: str = DEFAULT_LAYOUT) -> int:
        param, offset = LAYOUTS[layout][family]
        return 2 * getattr(self, param) - offset

    def labels(self, layout: str = DEFAULT_LAYOUT) -> Iterator[VertexLabel]:
        for fam in FCS_FAMILIES:
            for d in range(1, self.family_size(fam, layout) + 1):
                yield VertexLabel(fam, d)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    graph: Graph
    labels: tuple[VertexLabel, ...]
    name: str = ""

    @cached_property
    def _ids(self) -> dict[VertexLabel, int]:
        return {lab: v for v, lab in enumerate(self.labels)}

    @cached_property
    def family_sizes(self) -> dict[str, int]:
        sizes: dict[str, int] = {}
        for lab in self.labels:
            sizes[lab.family] = max(sizes.get(lab.family, 0), lab.d)
        return sizes

    def family_size(self, family: str) -> int:
        return self.family_sizes[family]

    def label_of(self, v: int) -> VertexLabel:
        return self.labels[v]

    def id_of(self, label: VertexLabel | str) -> int:
        if isinstance(label, str):
            label = parse_label(label)
        try:
            return self._ids[label]
        except KeyError:
            raise LabelError(f"label {format_label(label)} is not a vertex of {self.name or 'this graph'}") from None

    def ids_of(self, labels) -> list[int]:
        return [self.id_of(x) for x in labels]

    def edge_labels(self, e: tuple[int, int]) -> tuple[VertexLabel, VertexLabel]:
        return self.labels[e[0]], self.labels[e[1]]

    def format_edge(self, e: tuple[int, int]) -> str:
        x, y = self.edge_labels(e)
        return f"{x}-{y}"


def fcs_edge_list(params: FcsParams, layout: str = DEFAULT_LAYOUT) -> list[tuple[VertexLabel, VertexLabel]]:
    """Labeled edge set of FCS(a, b, c) as reconstructed in CONSTRUCTION_NOTES.md.

    Family ends are written through ``n(...)`` so the same adjacency serves
    both layouts; only the family lengths differ.
    """
    if layout not in LAYOUTS:
        raise ParameterError(f"unknown layout {layout!r}")
    L = VertexLabel

    def n(fam: str) -> int:
        return params.family_size(fam, layout)

    edges: list[tuple[VertexLabel, VertexLabel]] = []

    # path segments inside every family
    for fam in FCS_FAMILIES:
        edges.extend((L(fam, d), L(fam, d + 1)) for d in range(1, n(fam)))

    # rungs between outer cycle and interior paths: x_{2d} y_{2d-1}
    for outer, inner in (("p1", "s1"), ("p2", "s2"), ("q1", "t1"),
                         ("q2", "t2"), ("r1", "u1"), ("r2", "u2")):
        edges.extend((L(outer, 2 * d), L(inner, 2 * d - 1)) for d in range(1, (n(outer) + 1) // 2))

    # starphene arm rungs at odd positions
    for x, y in (("p3", "s3"), ("q3", "t3"), ("r3", "u3")):
        edges.extend((L(x, 2 * d - 1), L(y, 2 * d - 1)) for d in range(1, (n(x) + 3) // 2))

    # central ring
    edges += [(L("p3", 1), L("r3", 1)), (L("q3", 1), L("u3", 1)), (L("s3", 1), L("t3", 1))]

    # arm tips fused onto the interior cycle
    edges += [
        (L("p3", n("p3")), L("t2", n("t2") - 1)),
        (L("s3", n("s3")), L("u2", 2)),
        (L("q3", n("q3")), L("u1", n("u1") - 1)),
        (L("t3", n("t3")), L("s2", n("s2") - 1)),
        (L("r3", n("r3")), L("s1", n("s1") - 1)),
        (L("u3", n("u3")), L("t1", 2)),
    ]

    # corners closing the outer and interior cycles
    edges += [
        (L("p1", 1), L("q2", 1)), (L("s1", 1), L("t2", 1)),
        (L("p1", n("p1")), L("q1", 1)), (L("s1", n("s1")), L("t1", 1)),
        (L("q1", n("q1")), L("r1", 1)), (L("t1", n("t1")), L("u1", 1)),
        (L("r1", n("r1")), L("p2", n("p2"))), (L("u1", n("u1")), L("s2", n("s2"))),
        (L("p2", 1), L("r2", n("r2"))), (L("s2", 1), L("u2", n("u2"))),
        (L("r2", 1), L("q2", n("q2"))), (L("u2", 1), L("t2", n("t2"))),
    ]
    return edges


def _labeled(labels: list[VertexLabel], labeled_edges, name: str) -> LabeledGraph:
    ids = {lab: v for v, lab in enumerate(labels)}
    edges = []
    for x, y in labeled_edges:
        if x not in ids or y not in ids:
            bad = x if x not in ids else y
            raise ParameterError(f"edge endpoint {bad} is outside the vertex ranges of {name}")
        edges.append((ids[x], ids[y]))
    return LabeledGraph(build_graph(len(labels), edges), tuple(labels), name)


def build_fcs(params: FcsParams, layout: str = DEFAULT_LAYOUT) -> LabeledGraph:
    name = f"FCS{params}" if layout == DEFAULT_LAYOUT else f"FCS{params}[{layout}]"
    return _labeled(list(params.labels(layout)), fcs_edge_list(params, layout), name)


def corner_landmarks(lg: LabeledGraph) -> tuple[VertexLabel, VertexLabel, VertexLabel]:
    """The landmark triple p1:1, r1:1 and the r2 end adjacent to p2:1."""
    return VertexLabel("p1", 1), VertexLabel("r1", 1), VertexLabel("r2", lg.family_size("r2"))


def alternate_edge_landmarks(lg: LabeledGraph) -> tuple[VertexLabel, VertexLabel, VertexLabel]:
    """Variant with the far end of r1 in place of the r2 corner."""
    return VertexLabel("p1", 1), VertexLabel("r1", 1), VertexLabel("r1", lg.family_size("r1"))


def _seq_labels(n: int) -> list[VertexLabel]:
    return [VertexLabel(BASELINE_FAMILY, d) for d in range(1, n + 1)]


def build_path(n: int) -> LabeledGraph:
    if n < 2:
        raise ParameterError("path needs n ≥ 2")
    labs = _seq_labels(n)
    return _labeled(labs, list(zip(labs, labs[1:])), f"P{n}")


def build_cycle(n: int) -> LabeledGraph:
    if n < 3:
        raise ParameterError("cycle needs n ≥ 3")
    labs = _seq_labels(n)
    return _labeled(labs, list(zip(labs, labs[1:] + labs[:1])), f"C{n}")


def build_complete(n: int) -> LabeledGraph:
    if n < 2:
        raise ParameterError("complete graph needs n ≥ 2")
    labs = _seq_labels(n)
    return _labeled(labs, [(x, y) for p, x in enumerate(labs) for y in labs[p + 1:]], f"K{n}")


@dataclass(frozen=True)
class StructuralAudit:
    vertex_count: int
    edge_count: int
    degree2_count: int
    degree3_count: int
    euler_face_count: int
    connected: bool
    girth: int | None
    min_degree: int
    max_degree: int

    def expected(self, params: FcsParams) -> dict[str, object]:
        """Closed-form counts claimed for FCS(a, b, c)."""
        a, b, c = params.a, params.b, params.c
        s = a + b + c
        return {
            "vertex_count": 6 * (2 * a + 2 * b + 2 * c - 9),
            "edge_count": 3 * (5 * a + 5 * b + 5 * c - 21),
            "degree2_count": 6 * (s - 6),
            "degree3_count": 6 * (s - 3),
            "euler_face_count": (3 * s - 11) + 4,
            "connected": True,
            "girth": 6,
            "min_degree": 2,
            "max_degree": 3,
        }

    def discrepancies(self, params: FcsParams) -> dict[str, tuple[object, object]]:
        return {key: (getattr(self, key), want)
                for key, want in self.expected(params).items()
                if getattr(self, key) != want}


def audit(lg: LabeledGraph, params: FcsParams | None = None) -> StructuralAudit:
    """Structural counts measured on the graph itself (never from formulas).

    ``params`` is accepted for symmetry with the CLI; comparisons against the
    closed forms go through :meth:`StructuralAudit.discrepancies`.
    """
    g = lg.graph
    prof = degree_profile(g).counts
    connected = is_connected(g)
    return StructuralAudit(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        degree2_count=prof.get(2, 0),
        degree3_count=prof.get(3, 0),
        euler_face_count=g.edge_count - g.vertex_count + 2,
        connected=connected,
        girth=girth(g),
        min_degree=min(prof),
        max_degree=max(prof),
    )
