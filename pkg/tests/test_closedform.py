import pytest

from fcsdim import closedform as cf
from fcsdim.generators import FcsParams, VertexLabel, build_fcs
from fcsdim.tables import EDGE_TABLE, ETA_EDGES, VERTEX_TABLE


@pytest.fixture(scope="module")
def lg444():
    return build_fcs(FcsParams(4, 4, 4))


P444 = FcsParams(4, 4, 4)


def test_parse_affine():
    e = cf.parse_affine("2a+2c-d-1")
    assert e(a=4, b=0, c=5, d=3) == 14 and e.canonical
    assert cf.parse_affine("d")(d=7) == 7
    assert cf.parse_affine("0")() == 0
    for text in ("2b+2-3", "2b+2b-8"):
        e = cf.parse_affine(text)
        assert not e.canonical
    assert cf.parse_affine("2b+2-3")(b=4) == 7
    for bad in ("", "2x", "2a2b", "a+-"):
        with pytest.raises(cf.FormulaError):
            cf.parse_affine(bad)


def test_vertex_examples(lg444):
    assert cf.predicted_vertex_code(lg444, P444, VertexLabel("p1", 1)) == (0, 14, 14)
    assert cf.predicted_vertex_code(lg444, P444, VertexLabel("r1", 1)) == (14, 0, 14)
    assert cf.predicted_vertex_code(lg444, P444, VertexLabel("p3", 1)) == (9, 11, 11)
    with pytest.raises(cf.FormulaError):
        cf.predicted_vertex_code(lg444, P444, VertexLabel("p1", 8))


def test_edge_examples(lg444):
    assert cf.predicted_edge_code(lg444, P444, cf.EdgeDescriptor("V1", 11)) == (0, 14, 13)
    assert cf.predicted_edge_code(lg444, P444, cf.EdgeDescriptor("R1", 1)) == (13, 0, 14)
    assert cf.predicted_edge_code(lg444, P444, cf.EdgeDescriptor("V1", 7)) == (14, 13, 0)
    x, y = cf.descriptor_edge(lg444, P444, cf.EdgeDescriptor("V1", 7))
    assert {str(x), str(y)} == {"p2:1", "r2:7"}
    for bad in (cf.EdgeDescriptor("V1", 13), cf.EdgeDescriptor("P1", 7), cf.EdgeDescriptor("ZZ", 1),
                cf.EdgeDescriptor("PS1", 4)):
        with pytest.raises(cf.FormulaError):
            cf.predicted_edge_code(lg444, P444, bad)


def test_tables_kept_verbatim():
    assert len(VERTEX_TABLE) == 18
    assert len(EDGE_TABLE) == 27
    assert [len(v) for v in ETA_EDGES.values()] == [12, 9]
    assert EDGE_TABLE["P1"][0][2][2] == "2b+2-3"
    assert ETA_EDGES["V2"][6][4][0] == "2b+2b-8"


@pytest.mark.parametrize("mode,total", [("vertex", 90), ("edge", 117)])
def test_partition_at_444(lg444, mode, total):
    rep = cf.verify_formulas(lg444, P444, mode)
    assert rep.covered == total and rep.coverage_gaps == []
    objs = [e.obj for e in rep.entries]
    assert len(set(objs)) == total
    assert sum(sum(c.values()) for c in rep.family_counts().values()) == total


def test_family_cardinalities_at_444(lg444):
    v = {f: sum(c.values()) for f, c in cf.verify_formulas(lg444, P444, "vertex").family_counts().items()}
    assert v["P1"] == v["P2"] == 7 and v["S1"] == 5 and v["P3"] == 3
    e = {f: sum(c.values()) for f, c in cf.verify_formulas(lg444, P444, "edge").family_counts().items()}
    assert e["P1"] == e["P2"] == 6 and e["PS1"] == 3 and e["PS3"] == 2
    assert e["V1"] == 12 and e["V2"] == 9


def test_landmark_self_entries_are_zero(lg444):
    rep = cf.verify_formulas(lg444, P444, "vertex")
    by_obj = {e.obj: e for e in rep.entries}
    for pos, label in enumerate(("p1:1", "r1:1", "r2:7")):
        e = by_obj[label]
        assert e.oracle[pos] == 0 and e.predicted[pos] == 0


def test_errata_lists_every_non_match(lg444):
    for mode in ("vertex", "edge"):
        rep = cf.verify_formulas(lg444, P444, mode)
        errata = rep.errata
        assert all(e.status != cf.MATCH for e in errata)
        assert len([e for e in errata if e.status != cf.NONEXISTENT_EDGE]) == \
            sum(1 for e in rep.entries if e.status != cf.MATCH)
        for e in errata:
            if e.status in (cf.MISMATCH, cf.UNTRANSCRIBABLE):
                assert e.predicted is not None and e.expression.startswith("(")
            if e.status == cf.MISMATCH:
                assert e.predicted != e.oracle


def test_untranscribable_pieces_flagged(lg444):
    rep = cf.verify_formulas(lg444, P444, "edge")
    bad = {(e.family, e.expression) for e in rep.entries if e.status == cf.UNTRANSCRIBABLE}
    assert ("P1", "(d-1, 2a+2c-d-2, 2b+2-3)") in bad
    assert ("V2", "(2b+2b-8, 2b+2c-8, 2a+2b-7)") in bad


def test_nonexistent_printed_edges(lg444):
    rep = cf.verify_formulas(lg444, P444, "edge")
    names = {e.obj.split()[0] for e in rep.nonexistent}
    assert "V1/eta12" in names and "V1/eta4" in names
    assert all(e.status == cf.NONEXISTENT_EDGE for e in rep.nonexistent)


def test_report_deterministic(lg444):
    a = [e.to_dict() for e in cf.verify_formulas(lg444, P444, "edge").entries]
    b = [e.to_dict() for e in cf.verify_formulas(build_fcs(P444), P444, "edge").entries]
    assert a == b


def test_vertex_codes_agree_with_oracle_where_known(lg444):
    # these six families hold entirely at (4,4,4)
    rep = cf.verify_formulas(lg444, P444, "vertex")
    counts = rep.family_counts()
    for fam in ("P1", "Q1", "R1", "S1", "T1", "U1"):
        assert counts[fam][cf.MATCH] == sum(counts[fam].values())


def test_span_audit_verdicts():
    verdicts = cf.span_audit("vertex")
    assert len(verdicts) == sum(len(f.pieces) for f in cf.VERTEX_FAMILIES.values())
    by = {(v.family, v.piece): v for v in verdicts}
    assert by[("P1", 1)].verdict == "verified-by-span" and by[("P1", 1)].rank == 5
    assert by[("P2", 0)].verdict == cf.MISMATCH
    for v in verdicts:
        if v.verdict == "verified-by-span":
            assert v.mismatched == 0 and v.rank >= v.needed_rank
    edge = {(v.family, v.piece): v.verdict for v in cf.span_audit("edge")}
    assert edge[("P1", 0)] == cf.UNTRANSCRIBABLE
    assert edge[("U1", 1)] == "never-applied"


def test_lint_finds_printed_range_defects():
    kinds = {(i.family, i.kind) for i in cf.lint_tables("edge", range(4, 6))}
    assert ("U1", "gap") in kinds and ("QT1", "overlap") in kinds
    vk = {(i.family, i.kind) for i in cf.lint_tables("vertex", range(4, 6))}
    assert ("R1", "gap") in vk


def test_predicted_codes_nonnegative_on_grid():
    for mode in ("vertex", "edge"):
        assert not [i for i in cf.lint_tables(mode) if i.kind == "negative"]
