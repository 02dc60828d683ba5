"""Realisations in the plane, rigidity matrices and equivalence checks.

Direction rows use the convention that the columns of the first endpoint
``u`` of an edge (in canonical vertex order) hold ``(p(u) - p(v))^perp`` with
``(x, y)^perp = (y, -x)``; the columns of ``v`` hold the negation.  Any
consistent choice gives the same row space, so ranks are unaffected.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .errors import CoincidentEndpoints, DomainMismatch, PreconditionViolated
from .graph import Edge, EdgeKind, MixedGraph
from .linalg import PRIME_A, rank_fraction, rank_mod

SAMPLE_BITS = 40


class Domain(enum.Enum):
    RATIONAL = "rational"
    FLOAT = "float"
    PRIME = "prime"


@dataclass(frozen=True)
class Realisation:
    coords: Mapping
    domain: Domain = Domain.RATIONAL
    prime: int | None = None

    def __getitem__(self, v):
        return self.coords[v]

    def covers(self, g: MixedGraph) -> bool:
        return all(v in self.coords for v in g.vertices)

    def as_float(self) -> "Realisation":
        if self.domain is Domain.PRIME:
            raise DomainMismatch("prime-field coordinates have no real meaning")
        return Realisation({v: (float(x), float(y)) for v, (x, y) in self.coords.items()}, Domain.FLOAT)


def generic_realisation(
    g: MixedGraph, seed: int = 0, domain: Domain | str = Domain.RATIONAL, prime: int = PRIME_A
) -> Realisation:
    """Random coordinates standing in for a generic realisation.

    Prime field coordinates are uniform in ``[0, prime)``.  Rational and float
    coordinates are uniform integers in ``[1, 2**40]`` scaled by ``2**-40``.
    """
    domain = Domain(domain)
    rng = random.Random(f"{seed}:{domain.value}:{prime if domain is Domain.PRIME else 0}")
    coords = {}
    for v in g.vertices:
        if domain is Domain.PRIME:
            coords[v] = (rng.randrange(prime), rng.randrange(prime))
        else:
            a, b = rng.randint(1, 2**SAMPLE_BITS), rng.randint(1, 2**SAMPLE_BITS)
            if domain is Domain.RATIONAL:
                coords[v] = (Fraction(a, 2**SAMPLE_BITS), Fraction(b, 2**SAMPLE_BITS))
            else:
                coords[v] = (a / 2**SAMPLE_BITS, b / 2**SAMPLE_BITS)
    return Realisation(coords, domain, prime if domain is Domain.PRIME else None)


def edge_row_entries(e: Edge, pu, pv, p: int | None = None) -> tuple:
    """The four nonzero entries ``(u_x, u_y, v_x, v_y)`` of an edge's row."""
    dx, dy = pu[0] - pv[0], pu[1] - pv[1]
    if e.kind is EdgeKind.DIRECTION:
        dx, dy = dy, -dx
    if p is not None:
        return (dx % p, dy % p, -dx % p, -dy % p)
    return (dx, dy, -dx, -dy)


@dataclass(frozen=True)
class RigidityMatrix:
    rows: list
    edges: tuple
    vertices: tuple
    domain: Domain
    prime: int | None = None

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), 2 * len(self.vertices)

    def column_of(self, v) -> int:
        return 2 * self.vertices.index(v)

    def rank(self) -> int:
        if not self.rows:
            return 0
        if self.domain is Domain.PRIME:
            return rank_mod(self.rows, self.prime)
        if self.domain is Domain.RATIONAL:
            return rank_fraction(self.rows)
        return int(np.linalg.matrix_rank(np.array(self.rows, dtype=float)))


def rigidity_matrix(g: MixedGraph, p: Realisation) -> RigidityMatrix:
    if not p.covers(g):
        raise PreconditionViolated("realisation does not cover every vertex")
    index = {v: i for i, v in enumerate(g.vertices)}
    zero = 0 if p.domain is not Domain.FLOAT else 0.0
    rows = []
    for e in g.edges:
        pu, pv = p[e.u], p[e.v]
        if _same_point(pu, pv, p):
            raise CoincidentEndpoints(f"{e.u!r} and {e.v!r} are placed at the same point")
        row = [zero] * (2 * g.n)
        ux, uy, vx, vy = edge_row_entries(e, pu, pv, p.prime if p.domain is Domain.PRIME else None)
        i, j = 2 * index[e.u], 2 * index[e.v]
        row[i], row[i + 1], row[j], row[j + 1] = ux, uy, vx, vy
        rows.append(row)
    return RigidityMatrix(rows, g.edges, g.vertices, p.domain, p.prime)


def _same_point(a, b, p: Realisation) -> bool:
    if p.domain is Domain.PRIME:
        return (a[0] - b[0]) % p.prime == 0 and (a[1] - b[1]) % p.prime == 0
    return a[0] == b[0] and a[1] == b[1]


def infinitesimally_rigid(g: MixedGraph, trials: int = 3, seed: int = 0, prime: int = PRIME_A) -> bool:
    """Monte Carlo rigidity test; a ``True`` answer is always correct."""
    target = 2 * g.n - 2
    if g.n <= 1:
        return True
    for t in range(trials):
        p = generic_realisation(g, seed=seed * 1000 + t, domain=Domain.PRIME, prime=prime)
        if rigidity_matrix(g, p).rank() >= target:
            return True
    return False


# -- equivalence and congruence ---------------------------------------------------


def _check_domains(p: Realisation, q: Realisation) -> bool:
    """Return whether comparisons can be exact."""
    if p.domain is Domain.PRIME or q.domain is Domain.PRIME or p.domain is not q.domain:
        raise DomainMismatch(f"cannot compare {p.domain.value} with {q.domain.value} realisations")
    return p.domain is Domain.RATIONAL


def equivalence_residual(g: MixedGraph, p: Realisation, q: Realisation) -> float:
    """Largest relative constraint violation of ``q`` against ``p``.

    Length edges compare squared lengths, direction edges the cross product of
    the two edge vectors; both are divided by the natural scale of the edge.
    A direction edge collapsed to a point in ``q`` counts as residual 1.
    """
    worst = 0.0
    for e in g.edges:
        pd = (p[e.u][0] - p[e.v][0], p[e.u][1] - p[e.v][1])
        qd = (q[e.u][0] - q[e.v][0], q[e.u][1] - q[e.v][1])
        lp = pd[0] * pd[0] + pd[1] * pd[1]
        lq = qd[0] * qd[0] + qd[1] * qd[1]
        if e.kind is EdgeKind.LENGTH:
            r = abs(lq - lp) / max(lp, 1e-300)
        else:
            if lq == 0:
                r = 1.0
            else:
                r = abs(qd[0] * pd[1] - qd[1] * pd[0]) / math.sqrt(float(lp) * float(lq))
        worst = max(worst, float(r))
    return worst


def check_equivalent(g: MixedGraph, p: Realisation, q: Realisation, tol: float = 1e-9) -> bool:
    exact = _check_domains(p, q)
    if exact:
        return equivalence_residual(g, p, q) == 0
    return equivalence_residual(g, p, q) <= tol


def congruence_residual(p: Realisation, q: Realisation, sign: int | None = None) -> float:
    """Best-fit residual of ``q(v) = s * p(v) + t``, minimised over ``s = +-1``."""
    vs = list(p.coords)
    signs = (sign,) if sign is not None else (1, -1)
    best = math.inf
    for s in signs:
        diffs = [(float(q[v][0]) - s * float(p[v][0]), float(q[v][1]) - s * float(p[v][1])) for v in vs]
        tx = sum(d[0] for d in diffs) / len(diffs)
        ty = sum(d[1] for d in diffs) / len(diffs)
        res = max(math.hypot(d[0] - tx, d[1] - ty) for d in diffs)
        best = min(best, res)
    return best


def _vote_sign(p: Realisation, q: Realisation) -> int:
    vs = list(p.coords)
    v0 = vs[0]
    votes = 0
    for v in vs[1:]:
        pd = (p[v][0] - p[v0][0], p[v][1] - p[v0][1])
        qd = (q[v][0] - q[v0][0], q[v][1] - q[v0][1])
        plus = (qd[0] - pd[0]) ** 2 + (qd[1] - pd[1]) ** 2
        minus = (qd[0] + pd[0]) ** 2 + (qd[1] + pd[1]) ** 2
        votes += 1 if plus <= minus else -1
    return 1 if votes >= 0 else -1


def check_congruent(g: MixedGraph, p: Realisation, q: Realisation, tol: float = 1e-9) -> bool:
    """Whether ``q`` is a translate of ``p`` or of ``p`` rotated by 180 degrees."""
    exact = _check_domains(p, q)
    if not p.covers(g) or not q.covers(g):
        raise PreconditionViolated("realisations must cover every vertex")
    if g.n <= 1:
        return True
    p = Realisation({v: p[v] for v in g.vertices}, p.domain)
    q = Realisation({v: q[v] for v in g.vertices}, q.domain)
    s = _vote_sign(p, q)
    if exact:
        v0 = g.vertices[0]
        t = (q[v0][0] - s * p[v0][0], q[v0][1] - s * p[v0][1])
        return all(q[v][0] == s * p[v][0] + t[0] and q[v][1] == s * p[v][1] + t[1] for v in g.vertices)
    scale = max(1.0, max(math.hypot(float(x), float(y)) for x, y in p.coords.values()))
    return congruence_residual(p, q, s) <= tol * scale
