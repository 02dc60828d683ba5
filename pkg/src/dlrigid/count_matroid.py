"""Exhaustive sparsity-count oracle for the rigidity matroid.

A graph is independent exactly when every vertex set ``X`` with ``|X| >= 2``
induces at most ``2|X| - 2`` edges, and at most ``2|X| - 3`` edges of either
single kind.  Checking this over all subsets is exponential, so the oracle is
capped at 14 vertices and serves as ground truth for small instances only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import SubsetTooSmall, TooLargeForExhaustiveOracle
from .graph import D, L, Edge, MixedGraph, as_edge

MAX_VERTICES = 14


@dataclass(frozen=True)
class CountProfile:
    X: frozenset
    i: int
    iD: int
    iL: int


class CriticalKind(enum.Enum):
    NOT_CRITICAL = "NotCritical"
    MIXED = "MixedCritical"
    DIRECTION = "DirectionCritical"
    LENGTH = "LengthCritical"


class CircuitClass(enum.Enum):
    MIXED = "mixed"
    PURE = "pure"
    NONE = "none"


def _guard(g: MixedGraph) -> None:
    if g.n > MAX_VERTICES:
        raise TooLargeForExhaustiveOracle(f"{g.n} vertices exceeds the cap of {MAX_VERTICES}")


def _adjacency(g: MixedGraph) -> tuple[dict, list, list]:
    index = {v: i for i, v in enumerate(g.vertices)}
    dadj = [0] * g.n
    ladj = [0] * g.n
    for e in g.edges:
        a, b = index[e.u], index[e.v]
        adj = dadj if e.kind is D else ladj
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return index, dadj, ladj


def _profiles(g: MixedGraph) -> Iterator[tuple[int, int, int, int]]:
    """Yield ``(mask, |X|, iD(X), iL(X))`` for every nonempty ``X`` in Gray-code order."""
    _, dadj, ladj = _adjacency(g)
    n = g.n
    mask = size = i_d = i_l = 0
    for k in range(1, 1 << n):
        bit = (k & -k).bit_length() - 1
        if mask >> bit & 1:
            mask ^= 1 << bit
            size -= 1
            i_d -= (dadj[bit] & mask).bit_count()
            i_l -= (ladj[bit] & mask).bit_count()
        else:
            i_d += (dadj[bit] & mask).bit_count()
            i_l += (ladj[bit] & mask).bit_count()
            mask |= 1 << bit
            size += 1
        yield mask, size, i_d, i_l


def count_profile(g: MixedGraph, xs: Iterable) -> CountProfile:
    xs = frozenset(xs)
    i_d = sum(1 for e in g.edges if e.kind is D and e.u in xs and e.v in xs)
    i_l = sum(1 for e in g.edges if e.kind is L and e.u in xs and e.v in xs)
    return CountProfile(xs, i_d + i_l, i_d, i_l)


def count_independent(g: MixedGraph) -> bool:
    _guard(g)
    for _, size, i_d, i_l in _profiles(g):
        if size < 2:
            continue
        if i_d + i_l > 2 * size - 2 or i_d > 2 * size - 3 or i_l > 2 * size - 3:
            return False
    return True


def classify_circuit_by_counts(g: MixedGraph) -> CircuitClass:
    """Classify ``g`` (whole graph, no isolated vertices expected) by edge counts."""
    _guard(g)
    n, m = g.n, g.m
    full = (1 << n) - 1
    if g.is_mixed():
        if m != 2 * n - 1:
            return CircuitClass.NONE
        for mask, size, i_d, i_l in _profiles(g):
            if size < 2:
                continue
            if i_d > 2 * size - 3 or i_l > 2 * size - 3:
                return CircuitClass.NONE
            if mask != full and i_d + i_l > 2 * size - 2:
                return CircuitClass.NONE
        return CircuitClass.MIXED
    if g.is_pure():
        if m != 2 * n - 2:
            return CircuitClass.NONE
        for mask, size, i_d, i_l in _profiles(g):
            if size >= 2 and mask != full and i_d + i_l > 2 * size - 3:
                return CircuitClass.NONE
        return CircuitClass.PURE
    return CircuitClass.NONE


def classify_edge_set(g: MixedGraph, edges: Iterable) -> CircuitClass:
    return classify_circuit_by_counts(g.edge_subgraph(edges))


def critical_kind(g: MixedGraph, xs: Iterable) -> CriticalKind:
    xs = frozenset(xs)
    if len(xs) < 2:
        raise SubsetTooSmall("critical sets have at least two vertices")
    sub = g.induced(xs)
    if not count_independent(sub):
        return CriticalKind.NOT_CRITICAL
    prof = count_profile(g, xs)
    k = len(xs)
    if prof.i == 2 * k - 2:
        return CriticalKind.MIXED
    if prof.i == 2 * k - 3:
        if prof.iL == 0:
            return CriticalKind.DIRECTION
        if prof.iD == 0:
            return CriticalKind.LENGTH
    return CriticalKind.NOT_CRITICAL


def d_between(g: MixedGraph, xs: Iterable, ys: Iterable) -> int:
    """Number of edges joining ``X - Y`` to ``Y - X``."""
    xs, ys = set(xs), set(ys)
    a, b = xs - ys, ys - xs
    return sum(1 for e in g.edges if (e.u in a and e.v in b) or (e.u in b and e.v in a))


def d_three(g: MixedGraph, xs, ys, zs) -> int:
    xs, ys, zs = set(xs), set(ys), set(zs)
    return d_between(g, xs, ys - zs) + d_between(g, ys, zs - xs) + d_between(g, zs, xs - ys)


def count_rank(g: MixedGraph, edges: Iterable | None = None) -> int:
    """Greedy rank of an edge subset, using :func:`count_independent` on subgraphs."""
    es = g.edges if edges is None else sorted((as_edge(e) for e in edges), key=lambda e: e.key)
    chosen: list[Edge] = []
    for e in es:
        trial = chosen + [e]
        if count_independent(g.edge_subgraph(trial)):
            chosen = trial
    return len(chosen)


def count_is_independent(g: MixedGraph, edges: Iterable) -> bool:
    return count_independent(g.edge_subgraph(edges))
