"""Matroid connectivity and ear decompositions into mixed circuits."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NotMConnected, NotMixed, PreconditionViolated
from .graph import Edge, EdgeKind, MixedGraph, as_edge, sorted_vertices
from .rank_matroid import MatroidView


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, a):
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _sorted_edges(es: Iterable[Edge]) -> list[Edge]:
    return sorted((as_edge(e) for e in es), key=lambda e: e.key)


def _component_partition(view: MatroidView, es: list[Edge], evaluations: int | None) -> list[frozenset]:
    if not es:
        return []
    _, supports = view.basis_and_supports(es, evaluations)
    uf = _UnionFind(es)
    for e, circuit in supports.items():
        for f in circuit:
            uf.union(e, f)
    classes: dict = {}
    for e in es:
        classes.setdefault(uf.find(e), []).append(e)
    return sorted((frozenset(c) for c in classes.values()), key=lambda c: min(e.key for e in c))


def matroid_components(view: MatroidView, s: Iterable | None = None) -> list[frozenset]:
    """Connected components of the rigidity matroid restricted to ``S``.

    Two elements share a component iff some circuit contains both; the
    classes are the connected pieces of the fundamental-circuit hypergraph of
    any basis.  Coloops come out as singletons.
    """
    es = _sorted_edges(view.graph.edges if s is None else s)
    return _component_partition(view, es, None)


def _degree_filter(es: Sequence[Edge]) -> bool:
    deg: dict = {}
    for e in es:
        for w in e.ends:
            deg[w] = deg.get(w, 0) + 1
    return all(d >= 3 for d in deg.values())


def is_m_connected(view: MatroidView, s: Iterable | None = None) -> bool:
    """Connected and not trivially connected (at least two elements)."""
    es = _sorted_edges(view.graph.edges if s is None else s)
    if len(es) < 2:
        return False
    # every element lies in a circuit, and circuits have minimum degree 3
    if not _degree_filter(es):
        return False
    # a single evaluation can only split classes, never merge them wrongly
    if len(_component_partition(view, es, 1)) == 1:
        return True
    return len(_component_partition(view, es, None)) == 1


def same_component(view: MatroidView, s: Iterable, e: Edge, f: Edge) -> bool:
    for c in matroid_components(view, s):
        if e in c:
            return f in c
    return False


def circuit_through(view: MatroidView, e: Edge, f: Edge, s: Iterable | None = None) -> frozenset:
    """A circuit inside ``S`` containing both ``e`` and ``f``.

    Greedily drops every other element whose removal keeps ``e`` and ``f`` in
    one matroid component; the minimal surviving set is a circuit.
    """
    es = _sorted_edges(view.graph.edges if s is None else s)
    if not same_component(view, es, e, f):
        raise PreconditionViolated(f"no circuit contains both {e} and {f}")
    current = list(es)
    for g in es:
        if g == e or g == f:
            continue
        trial = [h for h in current if h != g]
        if same_component(view, trial, e, f):
            current = trial
    return frozenset(current)


@dataclass
class EarDecomposition:
    circuits: list[frozenset]
    lobes: list[frozenset] = field(default_factory=list)
    cumulative: list[frozenset] = field(default_factory=list)
    ranks: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.circuits)

    def vertex_split(self, i: int | None = None) -> tuple[frozenset, frozenset]:
        """``(X, Y)`` for ear ``i`` (default: the last): old and new vertices of ``G[C_i]``."""
        i = len(self.circuits) - 1 if i is None else i
        verts = {w for e in self.circuits[i] for w in e.ends}
        old = {w for e in self.cumulative[i - 1] for w in e.ends} if i > 0 else set()
        ys = frozenset(verts - old)
        return frozenset(verts) - ys, ys

    def to_json(self) -> list:
        return [
            {
                "circuit": [[e.u, e.v, e.kind.label] for e in _sorted_edges(c)],
                "lobe": [[e.u, e.v, e.kind.label] for e in _sorted_edges(lobe)],
                "rank": r,
            }
            for c, lobe, r in zip(self.circuits, self.lobes, self.ranks)
        ]


def _first_mixed_circuit(view: MatroidView) -> frozenset:
    es = list(view.graph.edges)
    _, supports = view.basis_and_supports(es)
    for e, c in sorted(supports.items(), key=lambda kv: kv[0].key):
        if len({f.kind for f in c}) == 2:
            return c
    l1 = next(e for e in es if e.kind is EdgeKind.LENGTH)
    d1 = next(e for e in es if e.kind is EdgeKind.DIRECTION)
    return circuit_through(view, l1, d1)


def ear_decomposition_mixed(view: MatroidView) -> EarDecomposition:
    """An ear decomposition whose circuits are all mixed.

    Each new ear is the fundamental circuit of a non-basis element with
    respect to a basis extending a basis of the edges covered so far; its lobe
    is then a circuit of the contraction by those edges, which makes it
    inclusion-minimal.  A pure ear is swapped for a mixed circuit with the
    same lobe through an opposite-kind edge of the first circuit.
    """
    g = view.graph
    if not g.is_mixed():
        raise NotMixed("graph is not mixed")
    if not is_m_connected(view):
        raise NotMConnected("graph is not M-connected")
    first = _first_mixed_circuit(view)
    dec = EarDecomposition([first], [first], [first], [view.rank(first)])
    covered = set(first)
    all_edges = list(g.edges)
    while len(covered) < len(all_edges):
        inside = [e for e in all_edges if e in covered]
        outside = [e for e in all_edges if e not in covered]
        _, supports = view.basis_and_supports(inside + outside)
        candidates = [e for e in outside if e in supports]
        chosen = None
        for e in candidates:
            if supports[e] & covered:
                chosen = supports[e]
                break
        if chosen is None:
            raise NotMConnected("no circuit meets the covered edges")
        lobe = chosen - covered
        if len({f.kind for f in chosen}) == 1:
            ek = min(lobe, key=lambda f: f.key)
            e1 = min((f for f in first if f.kind is not ek.kind), key=lambda f: f.key)
            chosen = circuit_through(view, e1, ek, covered | lobe)
            if chosen - covered != lobe:
                raise AssertionError("mixed replacement changed the lobe")
        covered |= chosen
        dec.circuits.append(chosen)
        dec.lobes.append(lobe)
        dec.cumulative.append(frozenset(covered))
        dec.ranks.append(view.rank(covered))
    return dec
