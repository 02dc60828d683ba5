"""Direction-length mixed multigraphs and the moves that build or reduce them.

Graphs are immutable values.  Every operation returns a new graph and leaves
its input untouched, so certificates can safely hold on to intermediate
snapshots.

Vertex labels are opaque hashable tokens (typically ``int`` or ``str``).  All
iteration happens in a canonical order given by :func:`vertex_key`, which is
what makes every downstream search deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Hashable, Iterable, Iterator, Mapping, Union

from .errors import (
    DanglingEndpoint,
    DuplicateLabel,
    DuplicateTypedEdge,
    EdgeAlreadyPresent,
    EdgeOfSameTypePresent,
    KindMismatchForPureNode,
    LoopEdge,
    NotANode,
    NotASeparation,
    PreconditionViolated,
    SideNotPure,
)

Vertex = Hashable


def vertex_key(v: Vertex) -> tuple:
    # ints sort before strings so mixed label sets still have a total order
    return (isinstance(v, str), v)


def sorted_vertices(vs: Iterable[Vertex]) -> list:
    return sorted(vs, key=vertex_key)


class EdgeKind(enum.IntEnum):
    DIRECTION = 0
    LENGTH = 1

    @property
    def other(self) -> "EdgeKind":
        return EdgeKind.LENGTH if self is EdgeKind.DIRECTION else EdgeKind.DIRECTION

    @property
    def label(self) -> str:
        return "direction" if self is EdgeKind.DIRECTION else "length"

    @classmethod
    def parse(cls, value: Union[str, "EdgeKind"]) -> "EdgeKind":
        if isinstance(value, EdgeKind):
            return value
        name = str(value).strip().lower()
        if name in ("d", "dir", "direction"):
            return cls.DIRECTION
        if name in ("l", "len", "length"):
            return cls.LENGTH
        raise ValueError(f"unknown edge kind {value!r}")

    def __repr__(self) -> str:
        return "D" if self is EdgeKind.DIRECTION else "L"


D = EdgeKind.DIRECTION
L = EdgeKind.LENGTH


@dataclass(frozen=True)
class Edge:
    """An undirected typed edge; endpoints are stored in canonical order."""

    u: Vertex
    v: Vertex
    kind: EdgeKind

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise LoopEdge(f"loop at vertex {self.u!r}")
        object.__setattr__(self, "kind", EdgeKind.parse(self.kind))
        if vertex_key(self.v) < vertex_key(self.u):
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)
        object.__setattr__(self, "_hash", hash((self.u, self.v, int(self.kind))))

    def __hash__(self) -> int:
        return self._hash

    @property
    def key(self) -> tuple:
        return (vertex_key(self.u), vertex_key(self.v), int(self.kind))

    @property
    def ends(self) -> tuple:
        return (self.u, self.v)

    def other_end(self, w: Vertex) -> Vertex:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise ValueError(f"{w!r} is not an endpoint of {self}")

    def __lt__(self, other: "Edge") -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return f"Edge({self.u!r}, {self.v!r}, {self.kind!r})"


EdgeLike = Union[Edge, tuple]


def as_edge(e: EdgeLike) -> Edge:
    if isinstance(e, Edge):
        return e
    u, v, k = e
    return Edge(u, v, EdgeKind.parse(k))


class MixedGraph:
    """A loop-free multigraph with at most one edge of each kind per vertex pair."""

    __slots__ = ("_vertices", "_edges", "_edge_set", "_incident", "_hash")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[EdgeLike] = ()):
        vs = list(vertices)
        seen: set = set()
        for v in vs:
            if v in seen:
                raise DuplicateLabel(f"vertex {v!r} declared twice")
            seen.add(v)
        es: set[Edge] = set()
        incident: dict = {v: [] for v in vs}
        for raw in edges:
            e = as_edge(raw)
            for w in e.ends:
                if w not in seen:
                    raise DanglingEndpoint(f"endpoint {w!r} of {e} is not a vertex")
            if e in es:
                raise DuplicateTypedEdge(f"{e.kind.label} edge {e.u!r}{e.v!r} repeated")
            es.add(e)
            incident[e.u].append(e)
            incident[e.v].append(e)
        self._vertices = tuple(sorted_vertices(vs))
        self._edge_set = frozenset(es)
        self._edges = tuple(sorted(es, key=lambda e: e.key))
        self._incident = {v: tuple(sorted(incident[v], key=lambda e: e.key)) for v in vs}
        self._hash = None

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> tuple:
        """All edges in canonical order."""
        return self._edges

    @property
    def edge_set(self) -> frozenset:
        return self._edge_set

    @property
    def direction_edges(self) -> tuple:
        return tuple(e for e in self._edges if e.kind is D)

    @property
    def length_edges(self) -> tuple:
        return tuple(e for e in self._edges if e.kind is L)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def counts(self) -> tuple[int, int, int]:
        """``(|V|, |D|, |L|)``."""
        nd = sum(1 for e in self._edges if e.kind is D)
        return self.n, nd, self.m - nd

    def __contains__(self, item) -> bool:
        if isinstance(item, Edge):
            return item in self._edge_set
        return item in self._incident

    def has_edge(self, u: Vertex, v: Vertex, kind: EdgeKind) -> bool:
        if u == v:
            return False
        return Edge(u, v, kind) in self._edge_set

    def edges_between(self, u: Vertex, v: Vertex) -> tuple:
        return tuple(e for e in self._incident[u] if e.other_end(u) == v)

    def incident(self, v: Vertex) -> tuple:
        return self._incident[v]

    def degree(self, v: Vertex) -> int:
        return len(self._incident[v])

    def neighbours(self, v: Vertex) -> tuple:
        return tuple(sorted_vertices({e.other_end(v) for e in self._incident[v]}))

    def min_degree(self) -> int:
        return min((len(es) for es in self._incident.values()), default=0)

    def kinds(self) -> frozenset:
        return frozenset(e.kind for e in self._edges)

    def is_mixed(self) -> bool:
        return len(self.kinds()) == 2

    def is_pure(self) -> bool:
        return len(self.kinds()) == 1

    # -- derived graphs --------------------------------------------------

    def with_edges(self, *edges: EdgeLike) -> "MixedGraph":
        return MixedGraph(self._vertices, list(self._edges) + [as_edge(e) for e in edges])

    def without_edges(self, *edges: EdgeLike) -> "MixedGraph":
        drop = {as_edge(e) for e in edges}
        missing = drop - self._edge_set
        if missing:
            raise PreconditionViolated(f"edges not present: {sorted(missing, key=lambda e: e.key)}")
        return MixedGraph(self._vertices, [e for e in self._edges if e not in drop])

    def with_vertices(self, *vs: Vertex) -> "MixedGraph":
        return MixedGraph(self._vertices + tuple(vs), self._edges)

    def without_vertices(self, *vs: Vertex) -> "MixedGraph":
        drop = set(vs)
        return MixedGraph(
            [v for v in self._vertices if v not in drop],
            [e for e in self._edges if e.u not in drop and e.v not in drop],
        )

    def induced(self, xs: Iterable[Vertex]) -> "MixedGraph":
        keep = set(xs)
        return MixedGraph(
            [v for v in self._vertices if v in keep],
            [e for e in self._edges if e.u in keep and e.v in keep],
        )

    def edge_subgraph(self, edges: Iterable[EdgeLike]) -> "MixedGraph":
        """The graph ``G[C]``: the given edges and the vertices they touch."""
        es = [as_edge(e) for e in edges]
        vs = {w for e in es for w in e.ends}
        return MixedGraph(vs, es)

    def relabel(self, mapping: Mapping) -> "MixedGraph":
        f = lambda v: mapping.get(v, v)
        return MixedGraph([f(v) for v in self._vertices], [Edge(f(e.u), f(e.v), e.kind) for e in self._edges])

    # -- value semantics -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._edge_set))
        return self._hash

    def __repr__(self) -> str:
        n, nd, nl = self.counts()
        return f"<MixedGraph |V|={n} |D|={nd} |L|={nl}>"

    def __iter__(self) -> Iterator:
        return iter(self._vertices)


def new_graph(vertices: Iterable[Vertex], edges: Iterable[EdgeLike]) -> MixedGraph:
    """Build and validate a graph from a vertex list and ``(u, v, kind)`` triples."""
    return MixedGraph(vertices, edges)


# -- base graphs ------------------------------------------------------------


class BaseKind(enum.Enum):
    K3_PLUS = "K3Plus"
    K3_MINUS = "K3Minus"


def base_graph(which: BaseKind | str, labels: tuple = (1, 2, 3)) -> MixedGraph:
    """``K3+`` (3 length + 2 direction edges) or ``K3-`` (3 direction + 2 length).

    With labels ``(a, b, c)`` the triangle ``ab, bc, ca`` carries the majority
    kind and the two minority edges are ``ab`` and ``bc``.
    """
    which = BaseKind(which)
    a, b, c = labels
    if len({a, b, c}) != 3:
        raise DuplicateLabel(f"labels must be distinct: {labels!r}")
    major, minor = (L, D) if which is BaseKind.K3_PLUS else (D, L)
    return MixedGraph(
        [a, b, c],
        [(a, b, major), (b, c, major), (c, a, major), (a, b, minor), (b, c, minor)],
    )


def pure_k4(kind: EdgeKind, labels: tuple) -> MixedGraph:
    if len(labels) != 4 or len(set(labels)) != 4:
        raise DuplicateLabel(f"need four distinct labels, got {labels!r}")
    kind = EdgeKind.parse(kind)
    return MixedGraph(labels, [(u, v, kind) for u, v in combinations(labels, 2)])


def match_base(g: MixedGraph) -> tuple[BaseKind, tuple] | None:
    """Return ``(which, labels)`` with ``base_graph(which, labels) == g``, if any."""
    if g.n != 3 or g.m != 5:
        return None
    for which in BaseKind:
        for perm in permutations(g.vertices):
            if base_graph(which, perm) == g:
                return which, perm
    return None


# -- moves ------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeAddition:
    edge: Edge

    def __post_init__(self) -> None:
        object.__setattr__(self, "edge", as_edge(self.edge))


@dataclass(frozen=True)
class ZeroExtension:
    """Add a fresh vertex ``v`` joined to ``x`` and ``y``.

    Not used by any construction certificate.
    """

    v: Vertex
    x: Vertex
    y: Vertex
    kinds: tuple

    certificate_move = False


@dataclass(frozen=True)
class OneExtension:
    """Delete ``deleted = xy`` and add a fresh ``v`` joined to ``x``, ``y``, ``z``.

    ``kinds`` gives the kinds of ``vx``, ``vy`` and ``vz`` in that order, where
    ``x, y`` are the endpoints of ``deleted`` in canonical order.
    """

    v: Vertex
    deleted: Edge
    z: Vertex
    kinds: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "deleted", as_edge(self.deleted))
        object.__setattr__(self, "kinds", tuple(EdgeKind.parse(k) for k in self.kinds))


@dataclass(frozen=True)
class TwoSumK4:
    """2-sum with a pure ``K4`` on the ``kind`` edge ``xy``.

    The ``xy`` edge is removed and ``x, y, n1, n2`` become a pure ``K4`` minus ``xy``.
    """

    x: Vertex
    y: Vertex
    new_labels: tuple
    kind: EdgeKind = field(default=D)

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", EdgeKind.parse(self.kind))
        object.__setattr__(self, "new_labels", tuple(self.new_labels))


def TwoSumDirK4(x: Vertex, y: Vertex, new_labels: tuple) -> TwoSumK4:
    return TwoSumK4(x, y, tuple(new_labels), D)


Move = Union[EdgeAddition, ZeroExtension, OneExtension, TwoSumK4]


def apply_move(g: MixedGraph, move: Move) -> MixedGraph:
    """Apply a forward move, checking its preconditions."""
    if isinstance(move, EdgeAddition):
        e = move.edge
        if e in g:
            raise PreconditionViolated(f"EdgeAddition: {e} already present")
        for w in e.ends:
            if w not in g:
                raise PreconditionViolated(f"EdgeAddition: {w!r} is not a vertex")
        return g.with_edges(e)

    if isinstance(move, ZeroExtension):
        v, x, y = move.v, move.x, move.y
        kinds = tuple(EdgeKind.parse(k) for k in move.kinds)
        _require_fresh(g, v, "ZeroExtension")
        _require_present(g, (x, y), "ZeroExtension")
        if x == y and kinds[0] == kinds[1]:
            raise PreconditionViolated("ZeroExtension: two edges to one vertex must differ in kind")
        return g.with_vertices(v).with_edges((v, x, kinds[0]), (v, y, kinds[1]))

    if isinstance(move, OneExtension):
        v, e, z, kinds = move.v, move.deleted, move.z, move.kinds
        if e not in g:
            raise PreconditionViolated(f"OneExtension: deleted edge {e} not present")
        _require_fresh(g, v, "OneExtension")
        _require_present(g, (z,), "OneExtension")
        if len(kinds) != 3:
            raise PreconditionViolated("OneExtension: need three kinds")
        if e.kind not in kinds:
            raise PreconditionViolated("OneExtension: no new edge has the kind of the deleted edge")
        x, y = e.u, e.v
        if z == x and kinds[0] == kinds[2]:
            raise PreconditionViolated("OneExtension: parallel new edges must differ in kind")
        if z == y and kinds[1] == kinds[2]:
            raise PreconditionViolated("OneExtension: parallel new edges must differ in kind")
        h = g.without_edges(e).with_vertices(v)
        return h.with_edges((v, x, kinds[0]), (v, y, kinds[1]), (v, z, kinds[2]))

    if isinstance(move, TwoSumK4):
        x, y, kind = move.x, move.y, move.kind
        if len(move.new_labels) != 2:
            raise PreconditionViolated("TwoSumK4: need exactly two new labels")
        n1, n2 = move.new_labels
        if n1 == n2:
            raise PreconditionViolated("TwoSumK4: new labels must differ")
        if x == y or not g.has_edge(x, y, kind):
            raise PreconditionViolated(f"TwoSumK4: no {kind.label} edge {x!r}{y!r}")
        _require_fresh(g, n1, "TwoSumK4")
        _require_fresh(g, n2, "TwoSumK4")
        h = g.without_edges(Edge(x, y, kind)).with_vertices(n1, n2)
        return h.with_edges(
            (x, n1, kind), (x, n2, kind), (y, n1, kind), (y, n2, kind), (n1, n2, kind)
        )

    raise TypeError(f"unknown move {move!r}")


def _require_fresh(g: MixedGraph, v: Vertex, op: str) -> None:
    if v in g:
        raise PreconditionViolated(f"{op}: label {v!r} is not fresh")


def _require_present(g: MixedGraph, vs: tuple, op: str) -> None:
    for w in vs:
        if w not in g:
            raise PreconditionViolated(f"{op}: {w!r} is not a vertex")


# -- reductions and cleaves ---------------------------------------------------


def node_kind(g: MixedGraph, v: Vertex) -> EdgeKind | None:
    """The common kind of the edges at a pure vertex, ``None`` for a mixed one."""
    kinds = {e.kind for e in g.incident(v)}
    return next(iter(kinds)) if len(kinds) == 1 else None


def one_reduction(g: MixedGraph, v: Vertex, x: Vertex, y: Vertex, kind: EdgeKind) -> MixedGraph:
    """Delete the node ``v`` and add the edge ``xy`` of the given kind."""
    _check_reduction(g, v, x, y, kind)
    return g.without_vertices(v).with_edges((x, y, kind))


def _check_reduction(g: MixedGraph, v: Vertex, x: Vertex, y: Vertex, kind: EdgeKind) -> EdgeKind:
    if v not in g or g.degree(v) != 3:
        raise NotANode(f"{v!r} does not have degree 3")
    kind = EdgeKind.parse(kind)
    nbrs = g.neighbours(v)
    if x == y or x not in nbrs or y not in nbrs:
        raise PreconditionViolated(f"{x!r}, {y!r} must be distinct neighbours of {v!r}")
    pure = node_kind(g, v)
    if pure is not None and pure is not kind:
        raise KindMismatchForPureNode(f"{v!r} is a {pure.label} node")
    if g.has_edge(x, y, kind):
        raise EdgeAlreadyPresent(f"{kind.label} edge {x!r}{y!r} exists")
    return kind


def reduction_move(g: MixedGraph, v: Vertex, x: Vertex, y: Vertex, kind: EdgeKind) -> OneExtension:
    """The 1-extension that undoes ``one_reduction(g, v, x, y, kind)``."""
    kind = _check_reduction(g, v, x, y, kind)
    e = Edge(x, y, kind)
    x, y = e.u, e.v
    rest = list(g.incident(v))
    ex = min((f for f in rest if f.other_end(v) == x), key=lambda f: f.kind)
    rest.remove(ex)
    ey = min((f for f in rest if f.other_end(v) == y), key=lambda f: f.kind)
    rest.remove(ey)
    (ez,) = rest
    return OneExtension(v, e, ez.other_end(v), (ex.kind, ey.kind, ez.kind))


def reduction_candidates(g: MixedGraph, v: Vertex) -> list[tuple]:
    """Every legal ``(x, y, kind)`` for a 1-reduction at the node ``v``."""
    if v not in g or g.degree(v) != 3:
        raise NotANode(f"{v!r} does not have degree 3")
    pure = node_kind(g, v)
    kinds = (pure,) if pure is not None else (D, L)
    out = []
    for x, y in combinations(g.neighbours(v), 2):
        for k in kinds:
            if not g.has_edge(x, y, k):
                out.append((x, y, k))
    return out


def two_cleave(g: MixedGraph, x: Vertex, y: Vertex, side: Iterable[Vertex]) -> tuple[MixedGraph, MixedGraph]:
    """Split ``g`` across ``{x, y}`` where the edges touching ``side`` are pure.

    Returns ``(G1, G2)`` with ``G2`` the pure side, both gaining an ``xy`` edge of
    the pure side's kind, so that ``g`` is the 2-sum of the two.
    """
    side = set(side)
    if x == y or x not in g or y not in g or x in side or y in side or not side:
        raise NotASeparation("cut must be two distinct vertices outside a nonempty side")
    if not side <= set(g.vertices):
        raise NotASeparation("side contains unknown vertices")
    rest = set(g.vertices) - side - {x, y}
    if not rest:
        raise NotASeparation("other side is empty")
    side_edges = []
    for e in g.edges:
        a, b = e.u in side, e.v in side
        if a or b:
            if (a and e.v in rest) or (b and e.u in rest):
                raise NotASeparation(f"{e} crosses the cut")
            side_edges.append(e)
    kinds = {e.kind for e in side_edges}
    if len(kinds) != 1:
        raise SideNotPure("edges touching the side are not all of one kind")
    (kind,) = kinds
    if g.has_edge(x, y, kind):
        raise EdgeOfSameTypePresent(f"{kind.label} edge {x!r}{y!r} already present")
    cut_edge = Edge(x, y, kind)
    g1 = g.without_vertices(*side).with_edges(cut_edge)
    g2 = MixedGraph(side | {x, y}, side_edges + [cut_edge])
    return g1, g2


# -- nodes ------------------------------------------------------------------


class NodeClass(enum.Enum):
    NOT_NODE = "NotNode"
    LEAF = "LeafNode"
    SERIES = "SeriesNode"
    BRANCHING = "BranchingNode"


def nodes(g: MixedGraph) -> tuple:
    return tuple(v for v in g.vertices if g.degree(v) == 3)


def node_subgraph(g: MixedGraph) -> MixedGraph:
    return g.induced(nodes(g))


def node_classification(g: MixedGraph) -> dict:
    sub = node_subgraph(g)
    out = {}
    for v in g.vertices:
        if v not in sub:
            out[v] = NodeClass.NOT_NODE
            continue
        d = sub.degree(v)
        out[v] = NodeClass.LEAF if d <= 1 else NodeClass.SERIES if d == 2 else NodeClass.BRANCHING
    return out
