import itertools
import random
from math import comb

import pytest

from fcsdim import _backend
from fcsdim import resolvability as res
from fcsdim.generators import (
    FcsParams,
    alternate_edge_landmarks,
    build_complete,
    build_cycle,
    build_fcs,
    build_path,
    corner_landmarks,
)
from fcsdim.graph import GraphError, all_pairs_distances, build_graph

from helpers import brute_force_dimension, random_graph

BACKENDS = _backend.available()


@pytest.fixture(scope="module")
def fcs444():
    lg = build_fcs(FcsParams(4, 4, 4))
    return lg, all_pairs_distances(lg.graph)


def test_vertex_code_examples(fcs444):
    lg, dm = fcs444
    U = lg.ids_of(corner_landmarks(lg))
    assert res.vertex_code(dm, U, lg.id_of("p1:1")) == (0, 14, 14)
    assert res.vertex_code(dm, U, lg.id_of("q1:1")) == (7, 7, 17)
    assert res.vertex_code(dm, U, U[0])[0] == 0


def test_edge_code_examples(fcs444):
    lg, dm = fcs444
    U = lg.ids_of(corner_landmarks(lg))
    eta7 = (lg.id_of("p2:1"), lg.id_of("r2:7"))
    assert res.edge_code(dm, U, eta7)[2] == 0
    for e in lg.graph.edges:
        ec = res.edge_code(dm, U, e)
        for end in e:
            vc = res.vertex_code(dm, U, end)
            assert all(0 <= v - x <= 1 for x, v in zip(ec, vc))


def test_codes_need_landmarks(fcs444):
    _, dm = fcs444
    with pytest.raises(ValueError):
        res.vertex_code(dm, (), 0)
    with pytest.raises(ValueError):
        res.edge_code(dm, (), (0, 1))


def test_path_endpoint_resolves_both_modes():
    g = build_path(4).graph
    for mode in res.MODES:
        assert res.is_resolving(g, [0], mode)
        assert res.check_minimality(g, [0], mode)
    assert not res.check_minimality(g, [0, 1], res.VERTEX)


def test_fcs_predicates(fcs444):
    lg, dm = fcs444
    g = lg.graph
    U = lg.ids_of(corner_landmarks(lg))
    for mode in res.MODES:
        assert res.is_resolving(g, U, mode, dm)
        assert res.check_minimality(g, U, mode, dm)
    assert res.is_independent(g, U)
    r = res.is_resolving(g, lg.ids_of(["p1:1", "p1:2"]), res.VERTEX, dm)
    assert not r and r.pair is not None
    x, y = r.pair
    P = lg.ids_of(["p1:1", "p1:2"])
    assert res.vertex_code(dm, P, x) == res.vertex_code(dm, P, y)
    r = res.is_resolving(g, lg.ids_of(["p1:1"]), res.EDGE, dm)
    assert not r


def test_alternate_edge_set_fails(fcs444):
    lg, dm = fcs444
    alt = lg.ids_of(alternate_edge_landmarks(lg))
    assert res.is_independent(lg.graph, alt)
    assert not res.is_resolving(lg.graph, alt, res.EDGE, dm)


def test_independence():
    g = build_path(3).graph
    assert res.is_independent(g, [1])
    assert not res.is_independent(g, [0, 1])
    assert res.is_independent(g, [0, 2])


def test_minimality_requires_resolving():
    g = build_cycle(6).graph
    with pytest.raises(ValueError):
        res.check_minimality(g, [0], res.VERTEX)


def test_disconnected_rejected():
    g = build_graph(4, [(0, 1), (2, 3)])
    for mode in res.MODES:
        with pytest.raises(GraphError):
            res.is_resolving(g, [0], mode)
        with pytest.raises(GraphError):
            res.certify_dimension(g, None, mode)


def test_bad_landmarks():
    g = build_path(3).graph
    with pytest.raises(ValueError):
        res.is_resolving(g, [0, 0])
    with pytest.raises(ValueError):
        res.is_resolving(g, [5])
    with pytest.raises(ValueError):
        res.certify_dimension(g, None, res.VERTEX, max_size=0)
    with pytest.raises(ValueError):
        res.code_table(g, None, "face")


@pytest.mark.parametrize("n", range(3, 9))
def test_baselines(n):
    for mode in res.MODES:
        assert res.certify_dimension(build_path(n).graph, None, mode).dimension == 1
        assert res.certify_dimension(build_cycle(n).graph, None, mode).dimension == 2
        assert res.certify_dimension(build_complete(n).graph, None, mode).dimension == n - 1


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("mode", res.MODES)
def test_fcs_certification(fcs444, backend, mode):
    lg, dm = fcs444
    r = res.certify_dimension(lg.graph, dm, mode, 3, threads=2, backend=backend, log=True)
    assert r.dimension == 3 and r.refuted_sizes == [1, 2]
    assert res.is_resolving(lg.graph, r.witness, mode, dm)
    assert [str(lg.labels[x]) for x in r.witness] == ["p1:1", "p1:7", "q1:7"]
    assert len(r.counterexample_log[2]) == comb(90, 2)
    for cand, pair in r.counterexample_log[2]:
        table = res.code_table(lg.graph, dm, mode)
        assert tuple(table[pair[0], list(cand)]) == tuple(table[pair[1], list(cand)])


def test_budget_exceeded(fcs444):
    lg, dm = fcs444
    r = res.certify_dimension(lg.graph, dm, res.VERTEX, 2)
    assert r.exceeded and r.refuted_sizes == [1, 2] and r.witness == ()
    with pytest.raises(res.BudgetExceeded) as info:
        res.certify_dimension(lg.graph, dm, res.VERTEX, 2, raise_on_budget=True)
    assert info.value.result.refuted_sizes == [1, 2]


def test_tiny_graphs():
    k2 = build_complete(2).graph
    assert res.certify_dimension(k2, None, res.VERTEX).dimension == 1
    assert res.certify_dimension(k2, None, res.EDGE).dimension == 1
    k1 = build_graph(1, [])
    assert res.certify_dimension(k1, None, res.VERTEX).dimension == 1


def test_brute_force_oracle_agreement():
    rng = random.Random(2024)
    checked = 0
    for _ in range(240):
        g = random_graph(rng, 9)
        for mode in res.MODES:
            if mode == res.EDGE and g.edge_count < 2:
                continue
            size, minimum_sets = brute_force_dimension(g, mode)
            r = res.certify_dimension(g, None, mode, threads=1)
            assert r.dimension == size
            assert r.witness == min(minimum_sets)
        checked += 1
    assert checked >= 200


def test_prune_and_backends_agree_with_unpruned_search():
    rng = random.Random(11)
    for _ in range(120):
        g = random_graph(rng, 9)
        for mode in res.MODES:
            runs = {(b, p, t): res.certify_dimension(g, None, mode, backend=b, prune=p, threads=t)
                    for b in BACKENDS for p in (False, True) for t in (1, 3)}
            outcomes = {(r.dimension, r.witness, tuple(r.refuted_sizes)) for r in runs.values()}
            assert len(outcomes) == 1
            for (b, p, t), r in runs.items():
                for size, (checked, pruned) in r.searched.items():
                    assert checked + pruned == comb(g.vertex_count, size)
                    if not p:
                        assert pruned == 0


def test_prune_validated_on_fcs(fcs444):
    lg, dm = fcs444
    for mode in res.MODES:
        pruned = res.certify_dimension(lg.graph, dm, mode, 3, prune=True)
        plain = res.certify_dimension(lg.graph, dm, mode, 3, prune=False)
        assert (pruned.dimension, pruned.witness) == (plain.dimension, plain.witness)
        assert pruned.searched[2][1] > 0 and plain.searched[2] == (comb(90, 2), 0)


@pytest.mark.parametrize("threads", [1, 2, 5, 16])
def test_witness_thread_invariant(fcs444, threads):
    lg, dm = fcs444
    base = res.certify_dimension(lg.graph, dm, res.EDGE, 3, threads=1)
    r = res.certify_dimension(lg.graph, dm, res.EDGE, 3, threads=threads)
    assert (r.witness, r.searched) == (base.witness, base.searched)


def test_find_resolving_set(fcs444):
    lg, dm = fcs444
    assert res.find_resolving_set(lg.graph, 2, res.VERTEX, dm) is None
    w = res.find_resolving_set(lg.graph, 3, res.VERTEX, dm, threads=3)
    assert w == res.certify_dimension(lg.graph, dm, res.VERTEX, 3).witness


def test_superset_monotonicity():
    rng = random.Random(5)
    for _ in range(150):
        g = random_graph(rng, 10)
        for mode in res.MODES:
            r = res.certify_dimension(g, None, mode)
            rest = [v for v in range(g.vertex_count) if v not in r.witness]
            extra = rng.sample(rest, rng.randint(0, len(rest)))
            assert res.is_resolving(g, list(r.witness) + extra, mode)


def test_permutation_invariance():
    rng = random.Random(9)
    for _ in range(100):
        g = random_graph(rng, 10)
        dm = all_pairs_distances(g)
        L = rng.sample(range(g.vertex_count), rng.randint(1, g.vertex_count))
        perm = L[:]
        rng.shuffle(perm)
        idx = [L.index(x) for x in perm]
        for v in range(g.vertex_count):
            c = res.vertex_code(dm, L, v)
            assert res.vertex_code(dm, perm, v) == tuple(c[i] for i in idx)
        for e in g.edges:
            c = res.edge_code(dm, L, e)
            assert res.edge_code(dm, perm, e) == tuple(c[i] for i in idx)
        for mode in res.MODES:
            assert bool(res.is_resolving(g, L, mode, dm)) == bool(res.is_resolving(g, perm, mode, dm))


def find_dim_edim_gap(seed=0, tries=2000):
    rng = random.Random(seed)
    for _ in range(tries):
        g = random_graph(rng, 10, p_min=0.2, p_max=0.7)
        dim = res.certify_dimension(g, None, res.VERTEX).dimension
        edim = res.certify_dimension(g, None, res.EDGE).dimension
        if dim != edim:
            return g, dim, edim
    return None


def test_random_search_finds_dim_edim_gap():
    found = find_dim_edim_gap()
    assert found is not None
    g, dim, edim = found
    assert g.vertex_count <= 10
    assert brute_force_dimension(g, res.VERTEX)[0] == dim
    assert brute_force_dimension(g, res.EDGE)[0] == edim
    # the vertex witness must not be reported as edge resolving, and vice versa
    vw = res.certify_dimension(g, None, res.VERTEX).witness
    ew = res.certify_dimension(g, None, res.EDGE).witness
    if dim < edim:
        assert not res.is_resolving(g, vw, res.EDGE)
    else:
        assert not res.is_resolving(g, ew, res.VERTEX)


def test_fallback_forced_by_environment(monkeypatch):
    import importlib
    monkeypatch.setenv("FCSDIM_PURE_PYTHON", "1")
    mod = importlib.reload(_backend)
    try:
        assert mod.BACKEND == mod.FALLBACK
    finally:
        monkeypatch.delenv("FCSDIM_PURE_PYTHON")
        importlib.reload(_backend)


def test_kernel_edge_arguments():
    table = res.code_table(build_cycle(5).graph)
    for b in BACKENDS:
        search = _backend.kernel(b)
        assert search(table, 2, 4, False) == (None, 0, 0)
        assert search(table, 0, 0, False) == (None, 0, 0)
        assert search(table, 1, 0, False)[0] is None
        assert search(table, 2, 0, False)[0] == (0, 1)
    with pytest.raises(ValueError):
        _backend.kernel("fortran")
