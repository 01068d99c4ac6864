"""Evaluate the printed code tables and diff them against oracle distances."""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from fcsdim.generators import FcsParams, LabeledGraph, VertexLabel, build_fcs, corner_landmarks
from fcsdim.graph import all_pairs_distances, edge_distance_table
from fcsdim.tables import EDGE_TABLE, ETA_EDGES, RUNG_PATTERNS, VERTEX_TABLE

MATCH = "match"
MISMATCH = "mismatch"
UNTRANSCRIBABLE = "untranscribable"
UNCOVERED = "uncovered"
NONEXISTENT_EDGE = "nonexistent edge"

_TERM = re.compile(r"([+-]?)(\d*)([a-z]?)")


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class Affine:
    """Integer affine expression parsed from printed text."""

    text: str
    coefs: tuple[tuple[str, int], ...]
    const: int
    canonical: bool

    def __call__(self, **env: int) -> int:
        return self.const + sum(c * env[v] for v, c in self.coefs)


def parse_affine(text: str, variables: str = "abcd") -> Affine:
    """Parse sums like ``2a+2c-d-1``.

    ``canonical`` is False when a variable appears in more than one term or
    there is more than one constant term (``2b+2b-8``, ``2b+2-3``); the value
    is still the literal sum.
    """
    s = text.replace(" ", "")
    if not s:
        raise FormulaError("empty expression")
    pos = 0
    coefs: dict[str, int] = {}
    const = 0
    seen_vars: list[str] = []
    n_consts = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, var = m.groups()
        if not digits and not var:
            raise FormulaError(f"cannot parse {text!r} at column {pos}")
        if pos > 0 and not sign:
            raise FormulaError(f"missing operator in {text!r} at column {pos}")
        if var and var not in variables:
            raise FormulaError(f"unknown symbol {var!r} in {text!r}")
        value = int(digits) if digits else 1
        if sign == "-":
            value = -value
        if var:
            coefs[var] = coefs.get(var, 0) + value
            seen_vars.append(var)
        else:
            const += value
            n_consts += 1
        pos = m.end()
    canonical = len(seen_vars) == len(set(seen_vars)) and n_consts <= 1
    return Affine(text, tuple(sorted(coefs.items())), const, canonical)


def _index_env(params: FcsParams) -> dict[str, int]:
    return {"a": params.a, "b": params.b, "c": params.c,
            "i": params.i, "j": params.j, "k": params.k}


def _label_from_pattern(pattern: str, params: FcsParams, sizes: dict[str, int] | None = None) -> VertexLabel:
    """Resolve ``fam:index``; ``n`` in the index is the family length from ``sizes``."""
    fam, idx = pattern.split(":")
    env = _index_env(params)
    if sizes is not None:
        env["n"] = sizes[fam]
    return VertexLabel(fam, parse_affine(idx, "abcijkn")(**env))


def _rung_count(outer: str, sizes: dict[str, int]) -> int:
    # outer-cycle rungs sit at even positions, arm rungs at odd ones
    n = sizes[outer]
    return (n - 1) // 2 if outer.endswith(("1", "2")) else (n + 1) // 2


@dataclass(frozen=True)
class Piece:
    family: str
    index: int
    lo: Affine
    hi: Affine
    exprs: tuple[Affine, Affine, Affine]

    @property
    def transcribable(self) -> bool:
        return all(e.canonical for e in self.exprs)

    def covers(self, params: FcsParams, d: int) -> bool:
        env = {"a": params.a, "b": params.b, "c": params.c}
        return self.lo(**env) <= d <= self.hi(**env)

    def evaluate(self, params: FcsParams, d: int) -> tuple[int, int, int]:
        env = {"a": params.a, "b": params.b, "c": params.c, "d": d}
        return tuple(e(**env) for e in self.exprs)

    @property
    def text(self) -> str:
        return "(" + ", ".join(e.text for e in self.exprs) + ")"

    @property
    def single_index(self) -> bool:
        """True when the range pins d to one affine function of (a, b, c)."""
        return self.lo.coefs == self.hi.coefs and self.lo.const == self.hi.const


@dataclass(frozen=True)
class FormulaFamily:
    name: str
    mode: str
    pieces: tuple[Piece, ...]

    def pieces_for(self, params: FcsParams, d: int) -> list[Piece]:
        return [p for p in self.pieces if p.covers(params, d)]


def _compile(table, mode: str) -> dict[str, FormulaFamily]:
    out = {}
    for name, rows in table.items():
        pieces = tuple(
            Piece(name, n, parse_affine(lo, "abc"), parse_affine(hi, "abc"),
                  tuple(parse_affine(x) for x in exprs))
            for n, (lo, hi, exprs) in enumerate(rows)
        )
        out[name] = FormulaFamily(name, mode, pieces)
    return out


def _compile_eta() -> dict[str, FormulaFamily]:
    out = {}
    for name, rows in ETA_EDGES.items():
        pieces = []
        for n, (_, _, _, _, exprs) in enumerate(rows, start=1):
            one = parse_affine(str(n), "abc")
            pieces.append(Piece(name, n - 1, one, one, tuple(parse_affine(x) for x in exprs)))
        out[name] = FormulaFamily(name, "edge", tuple(pieces))
    return out


VERTEX_FAMILIES = _compile(VERTEX_TABLE, "vertex")
EDGE_FAMILIES = {**_compile(EDGE_TABLE, "edge"), **_compile_eta()}




@dataclass(frozen=True)
class EdgeDescriptor:
    """Edge named by table family and index (``d`` or the eta number)."""

    family: str
    index: int

    def __str__(self) -> str:
        if self.family in ETA_EDGES:
            return f"{self.family}/eta{self.index}"
        return f"{self.family}[d={self.index}]"


def predicted_vertex_code(lg: LabeledGraph, params: FcsParams, label: VertexLabel) -> tuple[int, int, int]:
    fam = VERTEX_FAMILIES.get(label.family.upper())
    if fam is None or not 1 <= label.d <= lg.family_sizes.get(label.family, 0):
        raise FormulaError(f"{label} is not a vertex of FCS{params}")
    hits = fam.pieces_for(params, label.d)
    if not hits:
        raise FormulaError(f"no printed piece of {fam.name} covers d={label.d} at {params}")
    return hits[0].evaluate(params, label.d)


def descriptor_edge(lg: LabeledGraph, params: FcsParams, desc: EdgeDescriptor) -> tuple[VertexLabel, VertexLabel]:
    """Labels of the constructed edge a descriptor refers to."""
    f, n = desc.family, desc.index
    sizes = lg.family_sizes
    if f in ETA_EDGES:
        rows = ETA_EDGES[f]
        if not 1 <= n <= len(rows):
            raise FormulaError(f"{f} has no eta{n}")
        _, _, x, y, _ = rows[n - 1]
        return _label_from_pattern(x, params, sizes), _label_from_pattern(y, params, sizes)
    if f in RUNG_PATTERNS:
        outer, opat, inner, ipat, _ = RUNG_PATTERNS[f]
        if not 1 <= n <= _rung_count(outer, sizes):
            raise FormulaError(f"{f} has no index d={n} at {params}")
        env = {"d": n}
        return (VertexLabel(outer, parse_affine(opat, "d")(**env)),
                VertexLabel(inner, parse_affine(ipat, "d")(**env)))
    if f in EDGE_TABLE:
        fam = f.lower()
        if not 1 <= n < sizes[fam]:
            raise FormulaError(f"{f} has no path edge d={n} at {params}")
        return VertexLabel(fam, n), VertexLabel(fam, n + 1)
    raise FormulaError(f"unknown edge family {f!r}")


def printed_eta_edge(params: FcsParams, desc: EdgeDescriptor) -> tuple[VertexLabel, VertexLabel]:
    x, y, _, _, _ = ETA_EDGES[desc.family][desc.index - 1]
    return _label_from_pattern(x, params), _label_from_pattern(y, params)


def predicted_edge_code(lg: LabeledGraph, params: FcsParams, desc: EdgeDescriptor) -> tuple[int, int, int]:
    descriptor_edge(lg, params, desc)  # validates the index
    fam = EDGE_FAMILIES[desc.family]
    if desc.family in ETA_EDGES:
        return fam.pieces[desc.index - 1].evaluate(params, desc.index)
    hits = fam.pieces_for(params, desc.index)
    if not hits:
        raise FormulaError(f"no printed piece of {desc.family} covers d={desc.index} at {params}")
    return hits[0].evaluate(params, desc.index)


def edge_descriptors(lg: LabeledGraph) -> Iterable[EdgeDescriptor]:
    """Every edge slot the tables name, sized by the constructed graph."""
    sizes = lg.family_sizes
    for f in EDGE_TABLE:
        if f in RUNG_PATTERNS:
            count = _rung_count(RUNG_PATTERNS[f][0], sizes)
        else:
            count = sizes[f.lower()] - 1
        for d in range(1, count + 1):
            yield EdgeDescriptor(f, d)
    for f, rows in ETA_EDGES.items():
        for n in range(1, len(rows) + 1):
            yield EdgeDescriptor(f, n)


@dataclass(frozen=True)
class ErrataEntry:
    family: str
    obj: str
    d: int
    params: tuple[int, int, int]
    predicted: tuple[int, int, int] | None
    oracle: tuple[int, int, int] | None
    status: str
    piece: int | None = None
    expression: str = ""
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "family": self.family, "object": self.obj, "d": self.d,
            "a": self.params[0], "b": self.params[1], "c": self.params[2],
            "predicted": list(self.predicted) if self.predicted else None,
            "oracle": list(self.oracle) if self.oracle else None, "status": self.status,
            "piece": self.piece, "expression": self.expression, "note": self.note,
        }


@dataclass
class ErrataReport:
    params: FcsParams
    mode: str
    entries: list[ErrataEntry]
    coverage_gaps: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    nonexistent: list[ErrataEntry] = field(default_factory=list)

    @property
    def covered(self) -> int:
        return len(self.entries)

    def family_counts(self) -> dict[str, dict[str, int]]:
        order = VERTEX_TABLE if self.mode == "vertex" else EDGE_FAMILIES
        counts = {f: {MATCH: 0, MISMATCH: 0, UNTRANSCRIBABLE: 0, UNCOVERED: 0} for f in order}
        for e in self.entries:
            counts[e.family][e.status] += 1
        return counts

    def status_counts(self) -> dict[str, int]:
        out = {MATCH: 0, MISMATCH: 0, UNTRANSCRIBABLE: 0, UNCOVERED: 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    @property
    def errata(self) -> list[ErrataEntry]:
        """Every non-matching entry, then printed headings that name no edge."""
        return [e for e in self.entries if e.status != MATCH] + list(self.nonexistent)


def _vertex_family_of(label: VertexLabel) -> str:
    return label.family.upper()


def _classify_edges(lg: LabeledGraph, params: FcsParams):
    """Map each graph edge index to the descriptor whose slot it occupies."""
    by_pair = {}
    for desc in edge_descriptors(lg):
        x, y = descriptor_edge(lg, params, desc)
        key = frozenset((lg.id_of(x), lg.id_of(y)))
        if key in by_pair:
            raise FormulaError(f"{desc} and {by_pair[key]} name the same edge")
        by_pair[key] = desc
    return by_pair


def verify_formulas(lg: LabeledGraph, params: FcsParams, mode: str = "vertex",
                    table=None) -> ErrataReport:
    """Diff every printed code against oracle distances on ``lg``.

    ``table`` optionally supplies precomputed oracle rows (objects x vertices).
    """
    g = lg.graph
    dm = all_pairs_distances(g)
    land = lg.ids_of(corner_landmarks(lg))
    pabc = (params.a, params.b, params.c)
    entries: list[ErrataEntry] = []
    gaps: list[str] = []
    notes: list[str] = []
    nonexistent: list[ErrataEntry] = []

    def judge(fam_name, fam, obj, d, oracle, pieces, note=""):
        if not pieces:
            entries.append(ErrataEntry(fam_name, obj, d, pabc, None, oracle, UNCOVERED, note=note))
            return
        piece = pieces[0]
        if len(pieces) > 1:
            note = (note + "; " if note else "") + f"pieces {[p.index for p in pieces]} overlap, first used"
        pred = piece.evaluate(params, d)
        if not piece.transcribable:
            status = UNTRANSCRIBABLE
            note = (note + "; " if note else "") + (
                "literal sum equals oracle" if pred == oracle else "literal sum differs from oracle")
        else:
            status = MATCH if pred == oracle else MISMATCH
        entries.append(ErrataEntry(fam_name, obj, d, pabc, pred, oracle, status,
                                   piece.index, piece.text, note))

    if mode == "vertex":
        for v, lab in enumerate(lg.labels):
            fam = VERTEX_FAMILIES.get(_vertex_family_of(lab))
            oracle = tuple(int(x) for x in dm.dist[land, v])
            if fam is None:
                gaps.append(str(lab))
                continue
            judge(fam.name, fam, str(lab), lab.d, oracle, fam.pieces_for(params, lab.d))
    elif mode == "edge":
        et = edge_distance_table(g, dm) if table is None else table
        slots = _classify_edges(lg, params)
        for idx, e in enumerate(g.edges):
            desc = slots.get(frozenset(e))
            oracle = tuple(int(x) for x in et[idx, land])
            if desc is None:
                gaps.append(lg.format_edge(e))
                continue
            fam = EDGE_FAMILIES[desc.family]
            note = ""
            if desc.family in ETA_EDGES:
                px, py = printed_eta_edge(params, desc)
                bx, by = descriptor_edge(lg, params, desc)
                pieces = [fam.pieces[desc.index - 1]]
                if {px, py} != {bx, by}:
                    note = f"printed endpoints {px}-{py}; evaluated on {bx}-{by}"
                    if not _is_edge(lg, px, py):
                        nonexistent.append(ErrataEntry(
                            desc.family, f"{desc} printed {px}-{py}", desc.index, pabc,
                            pieces[0].evaluate(params, desc.index), oracle, NONEXISTENT_EDGE,
                            pieces[0].index, pieces[0].text,
                            f"not an edge of {lg.name}; slot occupied by {bx}-{by}"))
            else:
                pieces = fam.pieces_for(params, desc.index)
            judge(desc.family, fam, f"{str(desc)} {lg.format_edge(e)}", desc.index, oracle, pieces, note)
    else:
        raise ValueError(f"mode must be 'vertex' or 'edge', not {mode!r}")

    order = {f: n for n, f in enumerate(VERTEX_TABLE if mode == "vertex" else EDGE_FAMILIES)}
    entries.sort(key=lambda e: (order[e.family], e.d))
    nonexistent.sort(key=lambda e: (order[e.family], e.d))
    return ErrataReport(params, mode, entries, gaps, notes, nonexistent)


def _is_edge(lg: LabeledGraph, x: VertexLabel, y: VertexLabel) -> bool:
    if x.d > lg.family_sizes.get(x.family, 0) or y.d > lg.family_sizes.get(y.family, 0):
        return False
    return lg.graph.has_edge(lg.id_of(x), lg.id_of(y))


SPAN_PARAMS = ((4, 4, 4), (5, 5, 5), (4, 5, 6), (6, 4, 5))


@dataclass(frozen=True)
class PieceVerdict:
    mode: str
    family: str
    piece: int
    expression: str
    checked: int
    mismatched: int
    untranscribable: bool
    rank: int
    needed_rank: int

    @property
    def verdict(self) -> str:
        if self.untranscribable:
            return UNTRANSCRIBABLE
        if self.checked == 0:
            return "never-applied"
        if self.mismatched:
            return MISMATCH
        if self.rank >= self.needed_rank:
            return "verified-by-span"
        return "verified at tested sizes"


def span_audit(mode: str, param_sets=SPAN_PARAMS, builder=build_fcs) -> list[PieceVerdict]:
    """Per-piece verdicts across several parameter triples.

    A fully matching affine piece is reported verified-by-span when the
    checked (a, b, c, d) points affinely span the piece's domain.
    """
    points = defaultdict(list)
    bad = defaultdict(int)
    for abc in param_sets:
        params = FcsParams(*abc)
        rep = verify_formulas(builder(params), params, mode)
        for e in rep.entries:
            if e.piece is None:
                continue
            key = (e.family, e.piece)
            points[key].append((*abc, e.d, 1))
            if e.status != MATCH:
                bad[key] += 1
    families = VERTEX_FAMILIES if mode == "vertex" else EDGE_FAMILIES
    out = []
    for fam in families.values():
        for p in fam.pieces:
            pts = points.get((fam.name, p.index), [])
            rank = int(np.linalg.matrix_rank(np.array(pts, dtype=float))) if pts else 0
            needed = 4 if (p.single_index or fam.name in ETA_EDGES) else 5
            out.append(PieceVerdict(mode, fam.name, p.index, p.text, len(pts),
                                    bad[(fam.name, p.index)], not p.transcribable, rank, needed))
    return out


@dataclass(frozen=True)
class TableIssue:
    """A defect of the printed tables found without consulting any graph."""

    mode: str
    family: str
    kind: str  # gap | overlap | negative
    example: tuple[int, int, int, int]  # (a, b, c, d) of the first occurrence
    pieces: tuple[int, ...]
    detail: str = ""


def _printed_count(mode: str, family: str, params: FcsParams) -> int:
    """Objects of a family under the printed vertex ranges."""
    if mode == "vertex":
        return params.family_size(family.lower(), "printed")
    if family in RUNG_PATTERNS:
        return parse_affine(RUNG_PATTERNS[family][4], "abc")(a=params.a, b=params.b, c=params.c)
    if family in ETA_EDGES:
        return len(ETA_EDGES[family])
    return params.family_size(family.lower(), "printed") - 1


def lint_tables(mode: str, sizes=range(4, 9)) -> list[TableIssue]:
    """Gaps, overlaps and negative values of the printed pieces over ``sizes``^3.

    Ranges are taken against the printed family lengths; one issue is kept
    per (family, kind, pieces) with its first example.
    """
    families = VERTEX_FAMILIES if mode == "vertex" else EDGE_FAMILIES
    seen: dict[tuple, TableIssue] = {}
    for a in sizes:
        for b in sizes:
            for c in sizes:
                params = FcsParams(a, b, c)
                for fam in families.values():
                    eta = fam.name in ETA_EDGES
                    for d in range(1, _printed_count(mode, fam.name, params) + 1):
                        hits = [fam.pieces[d - 1]] if eta else fam.pieces_for(params, d)
                        if len(hits) != 1:
                            kind = "gap" if not hits else "overlap"
                            key = (fam.name, kind, tuple(p.index for p in hits))
                            seen.setdefault(key, TableIssue(mode, fam.name, kind, (a, b, c, d), key[2]))
                        for p in hits:
                            vals = p.evaluate(params, d)
                            if min(vals) < 0:
                                key = (fam.name, "negative", (p.index,))
                                seen.setdefault(key, TableIssue(mode, fam.name, "negative", (a, b, c, d),
                                                                (p.index,), f"{p.text} = {vals}"))
    return list(seen.values())
