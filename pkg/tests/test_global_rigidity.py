from fractions import Fraction
from itertools import combinations

import pytest

from corpus import (
    bfs_components,
    brute_direction_balanced,
    construct_corpus,
    k3_minus,
    k3_minus_sum_lk4,
    k3_plus,
    k3_plus_sum_dk4,
)
from dlrigid.count_matroid import count_rank
from dlrigid.errors import (
    DegenerateCutLine,
    DomainMismatch,
    NoUnbalancedSeparation,
    NotSingleLengthEdge,
    OutOfTheoremScope,
    TooFewVertices,
)
from dlrigid.global_rigidity import (
    ConditionStatus,
    build_witness,
    is_globally_rigid_mconn,
    is_redundantly_rigid,
    necessary_conditions,
    reflect,
    single_length_edge_verdict,
    two_edge_cuts,
)
from dlrigid.graph import D, L, new_graph, pure_k4
from dlrigid.rank_matroid import MatroidView
from dlrigid.realisation import (
    Domain,
    Realisation,
    check_congruent,
    check_equivalent,
    congruence_residual,
    equivalence_residual,
    generic_realisation,
)


def _exactly_equivalent(g, p, q):
    for e in g.edges:
        a = (p[e.u][0] - p[e.v][0], p[e.u][1] - p[e.v][1])
        b = (q[e.u][0] - q[e.v][0], q[e.u][1] - q[e.v][1])
        if e.kind is L and a[0] ** 2 + a[1] ** 2 != b[0] ** 2 + b[1] ** 2:
            return False
        if e.kind is D and (a[0] * b[1] - a[1] * b[0] != 0 or b == (0, 0)):
            return False
    return True


def _exactly_congruent(g, p, q):
    v0 = g.vertices[0]
    for s in (1, -1):
        t = (q[v0][0] - s * p[v0][0], q[v0][1] - s * p[v0][1])
        if all(q[v] == (s * p[v][0] + t[0], s * p[v][1] + t[1]) for v in g.vertices):
            return True
    return False


def test_necessary_conditions_examples():
    rep = necessary_conditions(k3_plus())
    assert rep.all_evaluated_hold()
    assert rep.condition_seven_status is ConditionStatus.NOT_EVALUATED
    assert not necessary_conditions(k3_minus_sum_lk4()).direction_balanced
    rep = necessary_conditions(pure_k4(L, (1, 2, 3, 4)))
    assert not rep.mixed and not rep.rigid
    with pytest.raises(TooFewVertices):
        necessary_conditions(new_graph([1, 2], [(1, 2, D)]))


def _k3_plus_with_pendant():
    # vertex 4 hangs off by two edges, both of them coloops
    return new_graph([1, 2, 3, 4], list(k3_plus().edges) + [(3, 4, L), (1, 4, D)])


def test_length_redundancy_flag():
    # K3- has two length edges and no coloops
    assert necessary_conditions(k3_minus()).length_redundant_ok
    g = _k3_plus_with_pendant()
    assert not necessary_conditions(g).length_redundant_ok


def _brute_two_edge_cuts(g):
    out = []
    for e, f in combinations(g.edges, 2):
        rest = [x for x in g.edges if x not in (e, f)]
        if len(bfs_components(g.vertices, rest)) > 1:
            out.append(frozenset((e, f)))
    return out


def test_two_edge_cuts_match_brute_force():
    for g, _ in construct_corpus("mconn", 40, 6):
        assert sorted(map(frozenset, two_edge_cuts(g)), key=sorted_key) == sorted(_brute_two_edge_cuts(g), key=sorted_key)


def sorted_key(s):
    return sorted(e.key for e in s)


def test_main_verdict_examples():
    assert is_globally_rigid_mconn(k3_plus_sum_dk4())
    assert not is_globally_rigid_mconn(k3_minus_sum_lk4())
    with pytest.raises(OutOfTheoremScope):
        is_globally_rigid_mconn(pure_k4(L, (1, 2, 3, 4)))
    with pytest.raises(OutOfTheoremScope):
        is_globally_rigid_mconn(_k3_plus_with_pendant())


def test_single_length_edge():
    g = pure_k4(D, (1, 2, 3, 4)).without_edges((1, 2, D)).with_edges((1, 2, L))
    assert g.n == 4 and g.m == 6
    assert single_length_edge_verdict(g) == (count_rank(g) == 2 * g.n - 2) is True
    assert not single_length_edge_verdict(new_graph([1, 2], [(1, 2, L)]))
    with pytest.raises(NotSingleLengthEdge):
        single_length_edge_verdict(k3_minus())


def test_reflect_fixes_the_line_and_is_an_involution():
    a, b = (Fraction(0), Fraction(0)), (Fraction(2), Fraction(1))
    z = (Fraction(3, 7), Fraction(-5, 3))
    assert reflect(a, a, b) == a and reflect(b, a, b) == b
    assert reflect(reflect(z, a, b), a, b) == z
    assert reflect((Fraction(0), Fraction(1)), (Fraction(0), Fraction(0)), (Fraction(1), Fraction(0))) == (0, -1)


def test_witness_example():
    g = k3_minus_sum_lk4()
    p = generic_realisation(g, 5, Domain.RATIONAL)
    q, sep = build_witness(g, p)
    assert sep.cut == (1, 2)
    assert _exactly_equivalent(g, p, q) and not _exactly_congruent(g, p, q)
    assert check_equivalent(g, p, q) and not check_congruent(g, p, q)
    pf = p.as_float()
    qf, _ = build_witness(g, pf)
    assert equivalence_residual(g, pf, qf) <= 1e-9
    assert congruence_residual(pf, qf) >= 1e-6


def test_witness_errors():
    with pytest.raises(NoUnbalancedSeparation):
        build_witness(k3_plus_sum_dk4(), generic_realisation(k3_plus_sum_dk4()))
    g = k3_minus_sum_lk4()
    p = generic_realisation(g)
    coords = dict(p.coords)
    coords[2] = coords[1]
    with pytest.raises(DegenerateCutLine):
        build_witness(g, Realisation(coords, Domain.RATIONAL))
    with pytest.raises(DomainMismatch):
        build_witness(g, generic_realisation(g, domain=Domain.PRIME))


def test_consistency_on_corpus():
    for g, _ in construct_corpus("mconn", 80, 8):
        verdict = is_globally_rigid_mconn(g)
        assert verdict == brute_direction_balanced(g)
        if verdict:
            rep = necessary_conditions(g)
            assert rep.mixed and rep.rigid and rep.two_connected and rep.direction_balanced
        else:
            p = generic_realisation(g, 1)
            q, _ = build_witness(g, p)
            assert _exactly_equivalent(g, p, q) and not _exactly_congruent(g, p, q)


def test_m_connected_mixed_graphs_are_redundantly_rigid():
    for g, _ in construct_corpus("mconn", 40, 8):
        view = MatroidView(g)
        assert is_redundantly_rigid(view)
        if g.n > 9:
            continue
        for e in g.edges:
            assert count_rank(g.without_edges(e)) == 2 * g.n - 2
