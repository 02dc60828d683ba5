import random
from itertools import combinations

import pytest

from corpus import k3_plus, random_small_graph
from dlrigid.count_matroid import CircuitClass, classify_edge_set, count_is_independent, count_rank
from dlrigid.errors import InputIndependent, NotDependentAfterAdding
from dlrigid.graph import D, Edge, pure_k4
from dlrigid.linalg import PRIME_A, PRIME_B, ModEchelon, rank_fraction
from dlrigid.rank_matroid import MatroidView, find_circuit, fundamental_circuit, is_independent, rank
from dlrigid.realisation import Domain, generic_realisation, rigidity_matrix


def test_rank_examples():
    assert rank(MatroidView(k3_plus())) == 4
    assert rank(MatroidView(k3_plus()), []) == 0
    k4 = pure_k4(D, (1, 2, 3, 4))
    assert rank(MatroidView(k4)) == 5 == count_rank(k4)


def test_independence_examples():
    view = MatroidView(k3_plus())
    for sub in combinations(k3_plus().edges, 4):
        assert is_independent(view, sub)
    assert not is_independent(view)
    assert is_independent(view, k3_plus().edges[:1])


def test_find_circuit_examples():
    g = k3_plus().with_edges((1, 3, D))
    c = find_circuit(MatroidView(g))
    assert len(c) == 5
    assert classify_edge_set(g, c) is CircuitClass.MIXED
    assert find_circuit(MatroidView(k3_plus())) == frozenset(k3_plus().edges)
    with pytest.raises(InputIndependent):
        find_circuit(MatroidView(k3_plus()), k3_plus().edges[:4])


def test_fundamental_circuit_examples():
    view = MatroidView(k3_plus())
    es = list(k3_plus().edges)
    assert fundamental_circuit(view, es[:4], es[4]) == frozenset(es)
    g = k3_plus().with_edges((1, 3, D))
    gview = MatroidView(g)
    _, basis = gview.greedy_basis()
    for e in g.edges:
        if e in basis:
            continue
        c = fundamental_circuit(gview, basis, e)
        assert e in c and len(c) == 5
        assert classify_edge_set(g, c) is CircuitClass.MIXED
    small = [Edge(1, 2, D)]
    with pytest.raises(NotDependentAfterAdding):
        fundamental_circuit(view, small, Edge(2, 3, D))


def test_rank_matches_exact_rational_and_count_oracles():
    rng = random.Random(21)
    for _ in range(120):
        g = random_small_graph(rng, 6)
        view = MatroidView(g)
        exact = rank_fraction(rigidity_matrix(g, generic_realisation(g, 3, Domain.RATIONAL)).rows) if g.m else 0
        assert view.rank() == count_rank(g) == exact


def test_two_primes_agree_on_independence():
    rng = random.Random(22)
    for _ in range(80):
        g = random_small_graph(rng, 6)
        a = MatroidView(g, primes=(PRIME_A,))
        b = MatroidView(g, primes=(PRIME_B,))
        for _ in range(10):
            sub = [e for e in g.edges if rng.random() < 0.5]
            assert a.is_independent(sub) == b.is_independent(sub) == count_is_independent(g, sub)


def test_rank_is_submodular_on_samples():
    rng = random.Random(23)
    for _ in range(40):
        g = random_small_graph(rng, 6)
        view = MatroidView(g)
        for _ in range(10):
            a = {e for e in g.edges if rng.random() < 0.5}
            b = {e for e in g.edges if rng.random() < 0.5}
            assert view.rank(a | b) + view.rank(a & b) <= view.rank(a) + view.rank(b)
            assert view.rank(a & b) <= view.rank(a)
        assert view.rank() <= max(0, 2 * g.n - 2)


def test_supports_are_fundamental_circuits():
    rng = random.Random(24)
    for _ in range(60):
        g = random_small_graph(rng, 6)
        if not g.edges:
            continue
        view = MatroidView(g)
        basis, supports = view.basis_and_supports(list(g.edges))
        assert count_is_independent(g, basis) and len(basis) == count_rank(g)
        for e, c in supports.items():
            # element elimination is the independent route
            assert c == view.fundamental_circuit(basis, e)


def test_echelon_expresses_dependent_rows():
    p = 101
    ech = ModEchelon(p, 3)
    assert ech.add("a", [1, 2, 3]) and ech.add("b", [0, 1, 1])
    combo = ech.express([2, 7, 9])
    assert combo == {"a": 2, "b": 3}
    assert ech.insert("c", [2, 7, 9]) == combo
    assert ech.rank == 2
