import random

import pytest

from corpus import (
    all_circuits,
    bfs_components,
    brute_components,
    construct_corpus,
    k3_plus,
    k3_plus_sum_dk4,
    random_small_graph,
    two_connected,
    two_k3_plus_at_vertex,
    vertices_of,
)
from dlrigid.count_matroid import CircuitClass, CriticalKind, classify_edge_set, critical_kind
from dlrigid.errors import NotMConnected, NotMixed
from dlrigid.graph import D, Edge, new_graph, pure_k4
from dlrigid.rank_matroid import MatroidView
from dlrigid.separations import is_k_connected
from dlrigid.structure import circuit_through, ear_decomposition_mixed, is_m_connected, matroid_components


def _as_sets(parts):
    return sorted((frozenset(p) for p in parts), key=lambda s: sorted(e.key for e in s))


def test_component_examples():
    g = two_k3_plus_at_vertex()
    comps = matroid_components(MatroidView(g))
    assert len(comps) == 2 and sorted(map(len, comps)) == [5, 5]
    assert _as_sets(comps) == _as_sets(brute_components(g))
    assert matroid_components(MatroidView(k3_plus())) == [frozenset(k3_plus().edges)]
    single = new_graph([1, 2], [(1, 2, D)])
    assert matroid_components(MatroidView(single)) == [frozenset(single.edges)]


def test_components_match_brute_force():
    rng = random.Random(31)
    tested = 0
    while tested < 40:
        g = random_small_graph(rng, 5)
        if g.m > 11:
            continue
        tested += 1
        assert _as_sets(matroid_components(MatroidView(g))) == _as_sets(brute_components(g))


def test_m_connected_examples():
    assert is_m_connected(MatroidView(k3_plus_sum_dk4()))
    assert not is_m_connected(MatroidView(two_k3_plus_at_vertex()))
    assert is_m_connected(MatroidView(k3_plus()))
    assert not is_m_connected(MatroidView(new_graph([1, 2], [(1, 2, D)])))


def test_m_connected_implies_two_connected():
    rng = random.Random(32)
    for _ in range(200):
        g = random_small_graph(rng, 6)
        if is_m_connected(MatroidView(g)):
            h = g.induced(vertices_of(g.edges))
            assert two_connected(h.vertices, h.edges)


def test_circuit_through():
    g = k3_plus_sum_dk4()
    view = MatroidView(g)
    e, f = Edge(1, 3, "L"), Edge(4, 5, D)
    c = circuit_through(view, e, f)
    assert e in c and f in c
    assert c in all_circuits(g)


def _check_decomposition(g, dec, circuits=None):
    view = MatroidView(g, seed=99)  # a second, independently sampled oracle
    prev: frozenset = frozenset()
    assert dec.cumulative[-1] == frozenset(g.edges)
    for i, c in enumerate(dec.circuits):
        assert len({e.kind for e in c}) == 2
        verts = vertices_of(c)
        assert len(c) == 2 * len(verts) - 1
        assert view.rank(c) == len(c) - 1
        assert all(view.is_independent(c - {e}) for e in c)
        lobe = c - prev
        assert lobe == dec.lobes[i]
        if i:
            assert c & prev  # E1
            assert lobe  # E2
            assert view.rank(prev | c) - view.rank(prev) == len(lobe) - 1
            ys = verts - vertices_of(prev)
            assert len(lobe) == 2 * len(ys) + 1
            sub = prev | c
            assert len(bfs_components(ys, sub)) <= 1
            if ys and len(verts) <= 14:
                assert critical_kind(g.edge_subgraph(c), verts - ys) is CriticalKind.MIXED
            if circuits is not None:
                # E3: no circuit meeting prev has a strictly smaller new part
                for other in circuits:
                    rest = other - prev
                    if other & prev and rest and rest < lobe:
                        pytest.fail(f"ear {i} violates lobe minimality")
        prev = prev | c


def test_ear_examples():
    g = k3_plus().with_edges((1, 3, D))
    dec = ear_decomposition_mixed(MatroidView(g))
    assert len(dec) == 2 and len(dec.lobes[1]) == 1
    _check_decomposition(g, dec, all_circuits(g))
    dec = ear_decomposition_mixed(MatroidView(k3_plus()))
    assert len(dec) == 1 and dec.circuits[0] == frozenset(k3_plus().edges)
    g = k3_plus_sum_dk4()
    dec = ear_decomposition_mixed(MatroidView(g))
    assert len(dec) == 1  # the sum is itself a mixed circuit
    assert classify_edge_set(g, dec.circuits[0]) is CircuitClass.MIXED


def test_ear_errors():
    with pytest.raises(NotMixed):
        ear_decomposition_mixed(MatroidView(pure_k4(D, (1, 2, 3, 4))))
    with pytest.raises(NotMConnected):
        ear_decomposition_mixed(MatroidView(two_k3_plus_at_vertex()))


def test_ears_brute_force_minimality_small_corpus():
    checked = 0
    for g, _ in construct_corpus("mconn", 60, 4):
        if g.m > 13 or g.n > 8:
            continue
        dec = ear_decomposition_mixed(MatroidView(g))
        _check_decomposition(g, dec, all_circuits(g))
        checked += 1
    assert checked >= 20


def test_ears_on_larger_corpus():
    for g, _ in construct_corpus("dbal", 40, 10):
        dec = ear_decomposition_mixed(MatroidView(g))
        _check_decomposition(g, dec)
        if len(dec) >= 2 and is_k_connected(g, 3):
            x, _ = dec.vertex_split()
            assert len(x) >= 3


def test_ears_serialise():
    g = k3_plus().with_edges((1, 3, D))
    data = ear_decomposition_mixed(MatroidView(g)).to_json()
    assert [len(item["lobe"]) for item in data] == [5, 1]
