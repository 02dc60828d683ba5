"""Fixtures and brute-force oracles shared by the test modules.

The oracles here deliberately avoid the library's matroid code: circuits
come from exhaustive subset enumeration under the sparsity counts, and
connectivity checks are plain breadth-first searches.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from dlrigid.construction import Mode, random_construct
from dlrigid.count_matroid import count_independent
from dlrigid.graph import D, L, BaseKind, MixedGraph, TwoSumK4, apply_move, base_graph, new_graph


def k3_plus() -> MixedGraph:
    return base_graph(BaseKind.K3_PLUS, (1, 2, 3))


def k3_minus() -> MixedGraph:
    return base_graph(BaseKind.K3_MINUS, (1, 2, 3))


def k3_plus_sum_dk4() -> MixedGraph:
    return apply_move(k3_plus(), TwoSumK4(1, 2, (4, 5), D))


def k3_minus_sum_lk4() -> MixedGraph:
    return apply_move(k3_minus(), TwoSumK4(1, 2, (4, 5), L))


def two_k3_plus_at_vertex() -> MixedGraph:
    a = k3_plus()
    b = base_graph(BaseKind.K3_PLUS, (3, 4, 5))
    return new_graph(range(1, 6), [(e.u, e.v, e.kind) for e in a.edges + b.edges])


def random_small_graph(rng: random.Random, max_vertices: int = 6) -> MixedGraph:
    n = rng.randint(2, max_vertices)
    density = rng.choice((0.2, 0.35, 0.5, 0.7))
    edges = [(u, v, k) for u, v in combinations(range(n), 2) for k in (D, L) if rng.random() < density]
    return new_graph(range(n), edges)


@lru_cache(maxsize=None)
def construct_corpus(mode: str, count: int, max_moves: int) -> tuple:
    """``count`` graphs from ``random_construct`` with ``seed % (max_moves + 1)`` moves."""
    return tuple(random_construct(seed, seed % (max_moves + 1), Mode(mode)) for seed in range(count))


# -- brute-force oracles ---------------------------------------------------------------


def vertices_of(edges) -> set:
    return {w for e in edges for w in e.ends}


def bfs_components(vertices, edges) -> list[set]:
    adj = {v: set() for v in vertices}
    for e in edges:
        if e.u in adj and e.v in adj:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
    seen: set = set()
    out = []
    for s in adj:
        if s in seen:
            continue
        comp, todo = {s}, [s]
        while todo:
            for w in adj[todo.pop()]:
                if w not in comp:
                    comp.add(w)
                    todo.append(w)
        seen |= comp
        out.append(comp)
    return out


def connected(vertices, edges) -> bool:
    return len(bfs_components(vertices, edges)) <= 1


def two_connected(vertices, edges) -> bool:
    vs = set(vertices)
    if len(vs) <= 2:
        return False
    return all(connected(vs - {v}, edges) for v in vs)


def three_edge_connected(vertices, edges) -> bool:
    edges = list(edges)
    for k in range(3):
        for gone in combinations(range(len(edges)), k):
            rest = [e for i, e in enumerate(edges) if i not in gone]
            if not connected(vertices, rest):
                return False
    return True


def count_dependent(edges) -> bool:
    edges = list(edges)
    return not count_independent(new_graph(sorted(vertices_of(edges)), [(e.u, e.v, e.kind) for e in edges]))


def all_circuits(g: MixedGraph) -> list[frozenset]:
    """Every circuit of ``g`` by increasing size, via the count oracle."""
    found: list[frozenset] = []
    edges = list(g.edges)
    for size in range(2, len(edges) + 1):
        for sub in combinations(edges, size):
            s = frozenset(sub)
            if any(c <= s for c in found):
                continue
            if count_dependent(s):
                found.append(s)
    return found


def brute_components(g: MixedGraph) -> list[frozenset]:
    parent = {e: e for e in g.edges}

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for c in all_circuits(g):
        first, *rest = list(c)
        for e in rest:
            parent[find(e)] = find(first)
    groups: dict = {}
    for e in g.edges:
        groups.setdefault(find(e), set()).add(e)
    return [frozenset(s) for s in groups.values()]


def brute_direction_balanced(g: MixedGraph) -> bool:
    """A 2-separation is unbalanced iff some component of ``G - {x, y}`` sees no direction edge."""
    for x, y in combinations(g.vertices, 2):
        comps = bfs_components(set(g.vertices) - {x, y}, g.edges)
        if len(comps) < 2:
            continue
        for comp in comps:
            if not any(e.kind is D and (e.u in comp or e.v in comp) for e in g.edges):
                return False
    return True


def count_components(g: MixedGraph) -> list[frozenset]:
    """Matroid components from count-oracle fundamental circuits (basis exchange)."""
    basis: list = []
    circuits = []
    for e in g.edges:
        if not count_dependent(basis + [e]):
            basis.append(e)
            continue
        circuits.append({e} | {f for f in basis if not count_dependent([x for x in basis if x != f] + [e])})
    parent = {e: e for e in g.edges}

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for c in circuits:
        first, *rest = list(c)
        for e in rest:
            parent[find(e)] = find(first)
    groups: dict = {}
    for e in g.edges:
        groups.setdefault(find(e), set()).add(e)
    return [frozenset(s) for s in groups.values()]
