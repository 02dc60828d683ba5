"""Global rigidity verdicts and reflection witnesses."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    DegenerateCutLine,
    DomainMismatch,
    NoUnbalancedSeparation,
    NotSingleLengthEdge,
    OutOfTheoremScope,
    PreconditionViolated,
    TooFewVertices,
)
from .graph import EdgeKind, MixedGraph
from .rank_matroid import MatroidView
from .realisation import Domain, Realisation
from .separations import (
    TwoSeparation,
    components,
    interior_edges,
    is_direction_balanced,
    is_k_connected,
    two_separations,
)
from .structure import is_m_connected, matroid_components


class ConditionStatus(enum.Enum):
    NOT_EVALUATED = "NotEvaluated"


@dataclass(frozen=True)
class NecessaryConditionsReport:
    mixed: bool
    rigid: bool
    two_connected: bool
    direction_balanced: bool
    two_edge_cuts_ok: bool
    length_redundant_ok: bool
    condition_seven_status: ConditionStatus = ConditionStatus.NOT_EVALUATED

    def all_evaluated_hold(self) -> bool:
        return all(
            (
                self.mixed,
                self.rigid,
                self.two_connected,
                self.direction_balanced,
                self.two_edge_cuts_ok,
                self.length_redundant_ok,
            )
        )


def _as_view(g) -> MatroidView:
    return g if isinstance(g, MatroidView) else MatroidView(g)


def is_rigid(view: MatroidView) -> bool:
    g = view.graph
    return g.n <= 1 or view.rank() == 2 * g.n - 2


def coloops(view: MatroidView) -> frozenset:
    """Edges lying in no circuit."""
    return frozenset(e for c in matroid_components(view) if len(c) == 1 for e in c)


def is_redundantly_rigid(view: MatroidView) -> bool:
    # deleting e keeps the rank iff e is not a coloop
    return is_rigid(view) and not coloops(view)


def _bridges(g: MixedGraph, skip=None) -> list:
    """Bridges of ``g`` minus the edge ``skip``; parallel edges of different kinds are distinct."""
    edges = [e for e in g.edges if e != skip]
    adj: dict = {v: [] for v in g.vertices}
    for i, e in enumerate(edges):
        adj[e.u].append((e.v, i))
        adj[e.v].append((e.u, i))
    disc: dict = {}
    low: dict = {}
    out = []
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for w, i in it:
                if i == via:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, i, iter(adj[w])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    out.append(edges[via])
    return out


def two_edge_cuts(g: MixedGraph) -> list[tuple]:
    """All pairs of edges whose removal disconnects a 2-edge-connected ``g``."""
    found = set()
    for e in g.edges:
        for f in _bridges(g, skip=e):
            found.add(tuple(sorted((e, f), key=lambda x: x.key)))
    return sorted(found, key=lambda c: (c[0].key, c[1].key))


def _two_edge_cuts_ok(g: MixedGraph) -> bool:
    if g.n >= 2 and (len(components(g)) > 1 or _bridges(g)):
        return False
    for e, f in two_edge_cuts(g):
        if e.kind is not EdgeKind.DIRECTION or f.kind is not EdgeKind.DIRECTION:
            return False
        common = set(e.ends) & set(f.ends)
        if not any(g.degree(w) == 2 for w in common):
            return False
    return True


def necessary_conditions(g) -> NecessaryConditionsReport:
    """Evaluate the combinatorial necessary conditions for global rigidity.

    The boundedness condition has no algorithm behind it and is always
    reported as not evaluated.
    """
    view = _as_view(g)
    g = view.graph
    if g.n < 3:
        raise TooFewVertices("at least three vertices are required")
    rigid = is_rigid(view)
    two_conn = is_k_connected(g, 2)
    balanced = two_conn and is_direction_balanced(g)
    lengths = g.length_edges
    if len(lengths) < 2:
        length_ok = True
    else:
        loops = coloops(view)
        length_ok = rigid and not any(e in loops for e in lengths)
    return NecessaryConditionsReport(
        mixed=g.is_mixed(),
        rigid=rigid,
        two_connected=two_conn,
        direction_balanced=balanced,
        two_edge_cuts_ok=_two_edge_cuts_ok(g),
        length_redundant_ok=length_ok,
    )


def is_globally_rigid_mconn(g) -> bool:
    """Generic global rigidity of a mixed M-connected graph: it holds iff the
    graph is direction-balanced."""
    view = _as_view(g)
    if not view.graph.is_mixed():
        raise OutOfTheoremScope("graph is not mixed")
    if not is_m_connected(view):
        raise OutOfTheoremScope("graph is not M-connected")
    return is_direction_balanced(view.graph)


def single_length_edge_verdict(g) -> bool:
    """With exactly one length edge, global rigidity coincides with rigidity."""
    view = _as_view(g)
    if len(view.graph.length_edges) != 1:
        raise NotSingleLengthEdge(f"graph has {len(view.graph.length_edges)} length edges")
    return is_rigid(view)


def direction_free_separation(g: MixedGraph) -> tuple[TwoSeparation, frozenset] | None:
    """First 2-separation with a side containing no direction edge, and that side."""
    for sep in two_separations(g):
        for side in (sep.side_a, sep.side_b):
            if all(e.kind is not EdgeKind.DIRECTION for e in interior_edges(g, side)):
                return sep, side
    return None


def reflect(z, a, b):
    """Mirror image of ``z`` in the line through ``a`` and ``b``."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    zx, zy = z[0] - a[0], z[1] - a[1]
    t = 2 * (zx * dx + zy * dy) / (dx * dx + dy * dy)
    return (a[0] + t * dx - zx, a[1] + t * dy - zy)


def build_witness(g: MixedGraph, p: Realisation) -> tuple[Realisation, TwoSeparation]:
    """An equivalent realisation obtained by folding a direction-free side over the cut line."""
    if p.domain is Domain.PRIME:
        raise DomainMismatch("witnesses need real coordinates")
    if not p.covers(g):
        raise PreconditionViolated("realisation does not cover every vertex")
    found = direction_free_separation(g)
    if found is None:
        raise NoUnbalancedSeparation("every 2-separation has direction edges on both sides")
    sep, side = found
    x, y = sep.cut
    a, b = p[x], p[y]
    if a[0] == b[0] and a[1] == b[1]:
        raise DegenerateCutLine(f"{x!r} and {y!r} are placed at the same point")
    coords = {v: (reflect(c, a, b) if v in side else c) for v, c in p.coords.items()}
    return Realisation(coords, p.domain), sep
