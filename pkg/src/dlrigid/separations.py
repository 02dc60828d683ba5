"""Vertex connectivity, 2-separations, balance and pure-K4 cleaves.

Everything here is brute force over vertex pairs, which is plenty for graphs
with a few dozen vertices and keeps the output order deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import NotTwoConnected, TooManyComponents
from .graph import D, EdgeKind, MixedGraph, Vertex, sorted_vertices, vertex_key

MAX_COMPONENTS = 16


def components(g: MixedGraph, removed: Iterable[Vertex] = ()) -> list[frozenset]:
    """Connected components of ``g`` minus ``removed``, in canonical order."""
    gone = set(removed)
    seen: set = set()
    out = []
    for s in g.vertices:
        if s in gone or s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            a = stack.pop()
            for e in g.incident(a):
                b = e.other_end(a)
                if b not in gone and b not in comp:
                    comp.add(b)
                    stack.append(b)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: MixedGraph) -> bool:
    return len(components(g)) <= 1


def is_k_connected(g: MixedGraph, k: int) -> bool:
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    if g.n <= k:
        return False
    for size in range(k):
        for cut in combinations(g.vertices, size):
            if len(components(g, cut)) > 1:
                return False
    return True


@dataclass(frozen=True)
class TwoSeparation:
    """A 2-separation ``(H1, H2)`` given by its cut and the vertices strictly on each side.

    Edges between the two cut vertices belong to neither side's interior.
    """

    cut: tuple
    side_a: frozenset
    side_b: frozenset
    direction_balanced: bool
    length_balanced: bool

    @property
    def balanced(self) -> bool:
        return self.direction_balanced and self.length_balanced

    def interior_kinds(self, g: MixedGraph, side: frozenset) -> frozenset:
        return frozenset(e.kind for e in interior_edges(g, side))

    def pure_sides(self, g: MixedGraph) -> list[tuple[frozenset, EdgeKind]]:
        out = []
        for side in (self.side_a, self.side_b):
            kinds = self.interior_kinds(g, side)
            if len(kinds) == 1:
                out.append((side, next(iter(kinds))))
        return out


def interior_edges(g: MixedGraph, side: Iterable[Vertex]) -> list:
    """Edges with at least one endpoint strictly inside ``side``."""
    side = set(side)
    return [e for e in g.edges if e.u in side or e.v in side]


def _has_kind(g: MixedGraph, side: frozenset, kind: EdgeKind) -> bool:
    return any(e.kind is kind for v in side for e in g.incident(v))


def make_separation(g: MixedGraph, cut: tuple, side_a: Iterable, side_b: Iterable) -> TwoSeparation:
    a, b = frozenset(side_a), frozenset(side_b)
    x, y = sorted_vertices(cut)
    return TwoSeparation(
        (x, y),
        a,
        b,
        _has_kind(g, a, EdgeKind.DIRECTION) and _has_kind(g, b, EdgeKind.DIRECTION),
        _has_kind(g, a, EdgeKind.LENGTH) and _has_kind(g, b, EdgeKind.LENGTH),
    )


def two_separations(g: MixedGraph) -> list[TwoSeparation]:
    if not is_k_connected(g, 2):
        raise NotTwoConnected("graph is not 2-connected")
    out = []
    for x, y in combinations(g.vertices, 2):
        comps = components(g, (x, y))
        c = len(comps)
        if c < 2:
            continue
        if c > MAX_COMPONENTS:
            raise TooManyComponents(f"{c} components after removing {x!r}, {y!r}")
        # component 0 always goes to side A; the rest are split every way
        for bits in range(2 ** (c - 1) - 1):
            side_a = set(comps[0])
            side_b: set = set()
            for i, comp in enumerate(comps[1:]):
                (side_a if bits >> i & 1 else side_b).update(comp)
            out.append(make_separation(g, (x, y), side_a, side_b))
    return out


def is_direction_balanced(g: MixedGraph) -> bool:
    return all(s.direction_balanced for s in two_separations(g))


def is_length_balanced(g: MixedGraph) -> bool:
    return all(s.length_balanced for s in two_separations(g))


def is_balanced(g: MixedGraph) -> bool:
    return all(s.balanced for s in two_separations(g))


def crosses(g: MixedGraph, s1: TwoSeparation, s2: TwoSeparation) -> bool:
    """Whether the cut of ``s1`` has its two vertices in different components of ``G - cut(s2)``."""
    if set(s1.cut) & set(s2.cut):
        return False
    x, y = s1.cut
    for comp in components(g, s2.cut):
        if x in comp:
            return y not in comp
    return False


def crossing(s1: TwoSeparation, s2: TwoSeparation, g: MixedGraph) -> bool:
    return crosses(g, s1, s2)


def ends(g: MixedGraph) -> list[frozenset]:
    """Vertex sets ``X`` with ``|N(X)| = 2``, something outside ``X + N(X)``, and
    every proper nonempty subset having at least three neighbours."""
    found = set()
    for s in two_separations(g):
        for side in (s.side_a, s.side_b):
            found.add(side)
    out = []
    for x in found:
        if any(y < x for y in found):
            continue
        out.append(x)
    return sorted(out, key=lambda s: sorted(vertex_key(v) for v in s))


def find_pure_k4_cleave(g: MixedGraph, kind: EdgeKind = D) -> tuple | None:
    """First ``(x, y, {n1, n2})`` where ``{n1, n2}`` plus an added ``xy`` edge is a pure ``K4``.

    Requires that the two side vertices carry exactly the five ``kind`` edges of
    ``K4 - xy``, that ``g`` has no ``kind`` edge ``xy``, and that something lies
    beyond the cut.
    """
    if g.n < 5:
        return None
    for n1, n2 in combinations(g.vertices, 2):
        if not g.has_edge(n1, n2, kind):
            continue
        if g.degree(n1) != 3 or g.degree(n2) != 3:
            continue
        if any(e.kind is not kind for e in g.incident(n1) + g.incident(n2)):
            continue
        rest1 = set(g.neighbours(n1)) - {n2}
        rest2 = set(g.neighbours(n2)) - {n1}
        if rest1 != rest2 or len(rest1) != 2:
            continue
        x, y = sorted_vertices(rest1)
        if g.has_edge(x, y, kind):
            continue
        return x, y, frozenset((n1, n2))
    return None


def find_dirk4_cleave(g: MixedGraph) -> tuple | None:
    return find_pure_k4_cleave(g, D)
