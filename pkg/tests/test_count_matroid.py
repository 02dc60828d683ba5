import random
from itertools import combinations

import pytest

from corpus import bfs_components, k3_minus, k3_plus, random_small_graph, three_edge_connected, two_connected
from dlrigid.count_matroid import (
    CircuitClass,
    CriticalKind,
    classify_circuit_by_counts,
    count_independent,
    count_profile,
    count_rank,
    critical_kind,
    d_between,
    d_three,
)
from dlrigid.errors import SubsetTooSmall, TooLargeForExhaustiveOracle
from dlrigid.graph import D, L, new_graph, pure_k4


def _naive_independent(g):
    # straight from the definition, no Gray code
    for size in range(2, g.n + 1):
        for xs in combinations(g.vertices, size):
            prof = count_profile(g, xs)
            if prof.i > 2 * size - 2 or prof.iD > 2 * size - 3 or prof.iL > 2 * size - 3:
                return False
    return True


def test_k3_plus_dependent_but_every_edge_deletion_independent():
    g = k3_plus()
    assert not count_independent(g)
    for e in g.edges:
        assert count_independent(g.without_edges(e))
    assert count_independent(new_graph([1, 2, 3], []))


def test_classification_examples():
    assert classify_circuit_by_counts(k3_minus()) is CircuitClass.MIXED
    assert classify_circuit_by_counts(k3_plus()) is CircuitClass.MIXED
    assert classify_circuit_by_counts(pure_k4(D, (1, 2, 3, 4))) is CircuitClass.PURE
    assert classify_circuit_by_counts(pure_k4(L, (1, 2, 3, 4))) is CircuitClass.PURE
    assert classify_circuit_by_counts(k3_plus().with_edges((1, 3, D))) is CircuitClass.NONE


def test_gray_code_scan_matches_naive_definition():
    rng = random.Random(5)
    for _ in range(150):
        g = random_small_graph(rng, 6)
        assert count_independent(g) == _naive_independent(g)


def test_critical_kinds():
    g = k3_plus().without_edges((1, 2, D))
    assert critical_kind(g, {1, 2, 3}) is CriticalKind.MIXED
    single = new_graph([1, 2, 3], [(1, 2, L)])
    assert critical_kind(single, {1, 2}) is CriticalKind.LENGTH
    assert critical_kind(new_graph([1, 2, 3], [(1, 2, D)]), {1, 2}) is CriticalKind.DIRECTION
    assert critical_kind(single, {1, 3}) is CriticalKind.NOT_CRITICAL
    with pytest.raises(SubsetTooSmall):
        critical_kind(single, {1})


def test_guard():
    g = new_graph(range(15), [])
    with pytest.raises(TooLargeForExhaustiveOracle):
        count_independent(g)


def test_d_helpers():
    g = k3_plus()
    # X - Y = {1}, Y - X = {3}: only the length edge 13 joins them
    assert d_between(g, {1, 2}, {2, 3}) == 1
    assert d_three(g, {1}, {2}, {3}) == d_between(g, {1}, {2}) + d_between(g, {2}, {3}) + d_between(g, {3}, {1})


def test_count_rank_examples():
    assert count_rank(k3_plus()) == 4
    assert count_rank(pure_k4(D, (1, 2, 3, 4))) == 5


def _mixed_critical_sets(g):
    return [
        frozenset(xs)
        for size in range(2, g.n + 1)
        for xs in combinations(g.vertices, size)
        if critical_kind(g, xs) is CriticalKind.MIXED
    ]


def test_union_law_for_mixed_critical_sets():
    rng = random.Random(8)
    checked = 0
    for _ in range(300):
        g = random_small_graph(rng, 6)
        if not count_independent(g):
            continue
        sets = _mixed_critical_sets(g)
        for x, y in combinations(sets, 2):
            if x & y:
                assert critical_kind(g, x | y) is CriticalKind.MIXED
                if len(x & y) >= 2:
                    assert critical_kind(g, x & y) is CriticalKind.MIXED
                assert d_between(g, x, y) == 0
                checked += 1
    assert checked > 0


def test_circuits_have_connectivity_and_minimum_degree():
    rng = random.Random(13)
    seen = 0
    for _ in range(400):
        g = random_small_graph(rng, 6)
        cls = classify_circuit_by_counts(g.induced([v for v in g.vertices if g.degree(v)]))
        if cls is CircuitClass.NONE:
            continue
        h = g.induced([v for v in g.vertices if g.degree(v)])
        seen += 1
        assert h.min_degree() == 3
        assert two_connected(h.vertices, h.edges)
        assert three_edge_connected(h.vertices, h.edges)
        assert len(bfs_components(h.vertices, h.edges)) == 1
    assert seen > 0
