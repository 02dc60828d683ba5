"""Inductive constructions: reduce a graph to K3+ or K3- and replay the moves.

Admissibility is decided operationally: a candidate deletion or 1-reduction
is performed and the result is tested for being mixed and M-connected.  The
search always tries edges before nodes and walks both in canonical order, so
certificates are deterministic.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .errors import (
    NotANode,
    NotDirectionBalanced,
    NotMConnected,
    NotMixed,
    PreconditionViolated,
    ReplayPreconditionFailure,
    TheoremViolation,
)
from .graph import (
    D,
    L,
    BaseKind,
    Edge,
    EdgeAddition,
    EdgeKind,
    MixedGraph,
    Move,
    OneExtension,
    TwoSumK4,
    apply_move,
    base_graph,
    match_base,
    one_reduction,
    reduction_candidates,
    reduction_move,
    sorted_vertices,
    two_cleave,
)
from .rank_matroid import MatroidView
from .separations import find_pure_k4_cleave, is_direction_balanced
from .structure import is_m_connected


class Mode(enum.Enum):
    DIRECTION_BALANCED = "dbal"
    MCONN_ONLY = "mconn"


@dataclass(frozen=True)
class InverseMove:
    """A reduction step together with the forward move that undoes it."""

    op: str  # "delete_edge" | "reduce"
    result: MixedGraph
    forward: Move
    node: object = None

    @property
    def edge(self) -> Edge:
        return self.forward.edge if isinstance(self.forward, EdgeAddition) else self.forward.deleted


@dataclass
class ConstructionCertificate:
    base: BaseKind
    labels: tuple
    moves: list = field(default_factory=list)
    mode: Mode = Mode.DIRECTION_BALANCED

    def base_graph(self) -> MixedGraph:
        return base_graph(self.base, self.labels)


def _child_view(view: MatroidView, g: MixedGraph) -> MatroidView:
    return MatroidView(g, view.primes, view.trials, view.seed)


def _mixed_mconn(view: MatroidView, g: MixedGraph) -> bool:
    return g.is_mixed() and is_m_connected(_child_view(view, g))


def _require_mixed_mconn(view: MatroidView) -> None:
    if not view.graph.is_mixed():
        raise NotMixed("graph is not mixed")
    if not is_m_connected(view):
        raise NotMConnected("graph is not M-connected")


# -- admissible and feasible steps ---------------------------------------------


def _edge_steps(view: MatroidView, balanced: bool) -> Iterator[InverseMove]:
    g = view.graph
    for e in g.edges:
        # M-connected graphs have minimum degree 3
        if g.degree(e.u) <= 3 or g.degree(e.v) <= 3:
            continue
        h = g.without_edges(e)
        if not _mixed_mconn(view, h):
            continue
        if balanced and not is_direction_balanced(h):
            continue
        yield InverseMove("delete_edge", h, EdgeAddition(e))


def _reduction_steps(view: MatroidView, v, balanced: bool) -> Iterator[InverseMove]:
    g = view.graph
    for x, y, k in reduction_candidates(g, v):
        h = one_reduction(g, v, x, y, k)
        if not _mixed_mconn(view, h):
            continue
        if balanced and not is_direction_balanced(h):
            continue
        yield InverseMove("reduce", h, reduction_move(g, v, x, y, k), node=v)


def admissible_edges(view: MatroidView) -> list[Edge]:
    _require_mixed_mconn(view)
    return [step.edge for step in _edge_steps(view, False)]


def admissible_reductions(view: MatroidView, v) -> list[tuple]:
    g = view.graph
    if v not in g or g.degree(v) != 3:
        raise NotANode(f"{v!r} is not a node")
    out = []
    for step in _reduction_steps(view, v, False):
        e = step.forward.deleted
        out.append((e.u, e.v, e.kind))
    return out


def _nodes(g: MixedGraph) -> list:
    return [v for v in g.vertices if g.degree(v) == 3]


def _steps(view: MatroidView, balanced: bool) -> Iterator[InverseMove]:
    yield from _edge_steps(view, balanced)
    for v in _nodes(view.graph):
        yield from _reduction_steps(view, v, balanced)


def admissible_moves(view: MatroidView) -> list[InverseMove]:
    _require_mixed_mconn(view)
    return list(_steps(view, False))


def feasible_moves(view: MatroidView) -> list[InverseMove]:
    """Admissible deletions and 1-reductions whose result stays direction-balanced."""
    _require_mixed_mconn(view)
    if not is_direction_balanced(view.graph):
        raise NotDirectionBalanced("graph is not direction-balanced")
    return list(_steps(view, True))


def is_terminal(g: MixedGraph) -> bool:
    return match_base(g) is not None


def find_cleave(g: MixedGraph, mode: Mode) -> tuple | None:
    kinds = (D,) if mode is Mode.DIRECTION_BALANCED else (D, L)
    for k in kinds:
        found = find_pure_k4_cleave(g, k)
        if found is not None:
            x, y, side = found
            return x, y, side, k
    return None


# -- decomposition -----------------------------------------------------------------


def decompose(view: MatroidView, mode: Mode | str = Mode.DIRECTION_BALANCED) -> ConstructionCertificate:
    """Reduce ``view.graph`` to ``K3+`` or ``K3-``, returning the forward construction."""
    mode = Mode(mode)
    g = view.graph
    if not g.is_mixed():
        raise PreconditionViolated("graph is not mixed")
    if not is_m_connected(view):
        raise PreconditionViolated("graph is not M-connected")
    balanced = mode is Mode.DIRECTION_BALANCED
    if balanced and not is_direction_balanced(g):
        raise PreconditionViolated("graph is not direction-balanced")
    backwards: list[Move] = []
    current = view
    while True:
        g = current.graph
        hit = match_base(g)
        if hit is not None:
            which, labels = hit
            return ConstructionCertificate(which, labels, backwards[::-1], mode)
        step = next(_steps(current, balanced), None)
        if step is not None:
            backwards.append(step.forward)
            current = _child_view(view, step.result)
            continue
        cleave = find_cleave(g, mode)
        if cleave is None:
            raise TheoremViolation(f"no reduction applies to {g!r}")
        x, y, side, k = cleave
        g1, _ = two_cleave(g, x, y, side)
        backwards.append(TwoSumK4(x, y, tuple(sorted_vertices(side)), k))
        current = _child_view(view, g1)


def replay(cert: ConstructionCertificate) -> MixedGraph:
    g = cert.base_graph()
    for i, move in enumerate(cert.moves):
        if (
            cert.mode is Mode.DIRECTION_BALANCED
            and isinstance(move, TwoSumK4)
            and move.kind is not EdgeKind.DIRECTION
        ):
            raise ReplayPreconditionFailure(i, "only direction-pure K4 2-sums are allowed in this mode")
        try:
            g = apply_move(g, move)
        except PreconditionViolated as exc:
            raise ReplayPreconditionFailure(i, str(exc)) from exc
    return g


# -- random forward construction -----------------------------------------------------


def _valid_extension(e: Edge, z, kinds: tuple) -> bool:
    if e.kind not in kinds:
        return False
    if z == e.u and kinds[0] == kinds[2]:
        return False
    return not (z == e.v and kinds[1] == kinds[2])


def _one_extension_options(g: MixedGraph, v) -> list[OneExtension]:
    return [
        OneExtension(v, e, z, kinds)
        for e in g.edges
        for z in g.vertices
        for kinds in product((D, L), repeat=3)
        if _valid_extension(e, z, kinds)
    ]


def _sample_extension(rng: random.Random, g: MixedGraph, v) -> OneExtension:
    # rejection sampling is uniform over the legal (edge, z, kinds) triples
    while True:
        e = rng.choice(g.edges)
        z = rng.choice(g.vertices)
        kinds = tuple(rng.choice((D, L)) for _ in range(3))
        if _valid_extension(e, z, kinds):
            return OneExtension(v, e, z, kinds)


def _random_move(rng: random.Random, g: MixedGraph, fresh: int, mode: Mode, allow: tuple) -> Move | None:
    """A uniformly chosen move type among those with a legal instance, then a uniform instance."""
    sum_kinds = (D,) if mode is Mode.DIRECTION_BALANCED else (D, L)
    additions = [
        Edge(u, w, k)
        for i, u in enumerate(g.vertices)
        for w in g.vertices[i + 1 :]
        for k in (D, L)
        if not g.has_edge(u, w, k)
    ]
    sum_edges = [e for e in g.edges if e.kind in sum_kinds]
    pools = []
    if "add" in allow and additions:
        pools.append("add")
    if "extend" in allow and g.edges:
        pools.append("extend")
    if "sum" in allow and sum_edges:
        pools.append("sum")
    if not pools:
        return None
    kind = rng.choice(pools)
    if kind == "add":
        return EdgeAddition(rng.choice(additions))
    if kind == "extend":
        return _sample_extension(rng, g, fresh)
    e = rng.choice(sum_edges)
    return TwoSumK4(e.u, e.v, (fresh, fresh + 1), e.kind)


def _fresh_after(move: Move, fresh: int) -> int:
    if isinstance(move, OneExtension):
        return fresh + 1
    if isinstance(move, TwoSumK4):
        return fresh + 2
    return fresh


def random_construct(
    seed: int, n_moves: int, mode: Mode | str = Mode.DIRECTION_BALANCED
) -> tuple[MixedGraph, ConstructionCertificate]:
    """Build a graph by ``n_moves`` randomly sampled legal forward moves.

    Each step first picks a move type among those with a legal instance, then
    an instance uniformly.  Integer labels ``0, 1, 2, ...`` are used.
    """
    mode = Mode(mode)
    rng = random.Random(seed)
    which = rng.choice(list(BaseKind))
    cert = ConstructionCertificate(which, (0, 1, 2), [], mode)
    g = cert.base_graph()
    fresh = 3
    for _ in range(n_moves):
        move = _random_move(rng, g, fresh, mode, ("add", "extend", "sum"))
        if move is None:
            break
        g = apply_move(g, move)
        cert.moves.append(move)
        fresh = _fresh_after(move, fresh)
    return g, cert


def random_construct_sized(
    seed: int, n_vertices: int, mode: Mode | str = Mode.DIRECTION_BALANCED, add_rate: float = 0.0
) -> tuple[MixedGraph, ConstructionCertificate]:
    """Grow a certified graph with exactly ``n_vertices`` vertices.

    Only vertex-adding moves are used, plus an edge addition after each with
    probability ``add_rate``; with the default the result has ``2|V| - 1`` edges.
    """
    mode = Mode(mode)
    if n_vertices < 3:
        raise PreconditionViolated("constructions start from three vertices")
    rng = random.Random(seed)
    which = rng.choice(list(BaseKind))
    cert = ConstructionCertificate(which, (0, 1, 2), [], mode)
    g = cert.base_graph()
    fresh = 3
    while g.n < n_vertices:
        allow = ("extend", "sum") if n_vertices - g.n >= 2 else ("extend",)
        move = _random_move(rng, g, fresh, mode, allow)
        g = apply_move(g, move)
        cert.moves.append(move)
        fresh = _fresh_after(move, fresh)
        if add_rate and rng.random() < add_rate:
            move = _random_move(rng, g, fresh, mode, ("add",))
            if move is not None:
                g = apply_move(g, move)
                cert.moves.append(move)
    return g, cert
