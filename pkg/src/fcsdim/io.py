"""Text serializations of labeled graphs: edgelist, DOT and JSON."""

from __future__ import annotations

import json

from fcsdim.generators import (
    FCS_FAMILIES,
    LabeledGraph,
    VertexLabel,
    _labeled,
    format_label,
    parse_label,
)

SCHEMA_VERSION = 1


def _sorted_pairs(lg: LabeledGraph) -> list[tuple[str, str]]:
    # endpoints in VertexId order, lines in plain string order
    return sorted((format_label(lg.labels[u]), format_label(lg.labels[v])) for u, v in lg.graph.edges)


def to_edgelist(lg: LabeledGraph, header: dict[str, object]) -> str:
    lines = [f"# {lg.name}"]
    lines.append("# " + " ".join(f"{k}={v}" for k, v in header.items()))
    lines.append(f"# vertices={lg.graph.vertex_count} edges={lg.graph.edge_count}")
    lines += [f"{x} {y}" for x, y in _sorted_pairs(lg)]
    return "\n".join(lines) + "\n"


def to_dot(lg: LabeledGraph, header: dict[str, object]) -> str:
    lines = [f"// {lg.name} " + " ".join(f"{k}={v}" for k, v in header.items()), "graph FCS {"]
    lines += [f'  "{format_label(lab)}";' for lab in lg.labels]
    lines += [f'  "{x}" -- "{y}";' for x, y in _sorted_pairs(lg)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_payload(lg: LabeledGraph, header: dict[str, object]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "name": lg.name,
        "params": header,
        "vertices": [format_label(lab) for lab in lg.labels],
        "edges": [list(p) for p in _sorted_pairs(lg)],
    }


def to_json(lg: LabeledGraph, header: dict[str, object]) -> str:
    return json.dumps(graph_payload(lg, header), indent=2, ensure_ascii=False) + "\n"


def _label_key(lab: VertexLabel):
    fam = FCS_FAMILIES.index(lab.family) if lab.family in FCS_FAMILIES else len(FCS_FAMILIES)
    return fam, lab.family, lab.d


def read_edgelist(text: str, name: str = "") -> tuple[LabeledGraph, dict[str, str]]:
    """Parse an edgelist; returns the graph and ``key=value`` pairs from comments.

    Vertex ids follow the canonical family order, so re-reading an emitted
    FCS edgelist reproduces the original ids.
    """
    meta: dict[str, str] = {}
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                if "=" in tok:
                    k, v = tok.split("=", 1)
                    meta[k] = v
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two labels, got {line!r}")
        pairs.append((parse_label(parts[0]), parse_label(parts[1])))
    labels = sorted({lab for p in pairs for lab in p}, key=_label_key)
    return _labeled(labels, pairs, name), meta
