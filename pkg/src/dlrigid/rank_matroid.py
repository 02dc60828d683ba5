"""Randomised rank oracle for the rigidity matroid.

Each :class:`MatroidView` fixes one random prime-field realisation per
``(prime, trial)`` pair for its whole lifetime, so every query answered by the
view is consistent with a single family of linear matroids.  Ranks are the
maximum over those evaluations.  The error is one-sided: a reported rank is
never larger than the generic rank, and it is smaller only if every
evaluation hits the zero set of a nonzero minor, which by Schwartz-Zippel has
probability at most ``(2|V| / p) ** (trials * primes)``.

A view caches ranks and is not safe to share between threads while the cache
is being filled; use one view per thread.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .errors import InputIndependent, NotDependentAfterAdding, PreconditionViolated
from .graph import Edge, MixedGraph, as_edge
from .linalg import PRIMES, ModEchelon
from .realisation import edge_row_entries


class MatroidView:
    def __init__(
        self,
        graph: MixedGraph,
        primes: Sequence[int] = PRIMES,
        trials: int = 3,
        seed: int = 0,
    ):
        self.graph = graph
        self.primes = tuple(primes)
        self.trials = trials
        self.seed = seed
        self._index = {e: i for i, e in enumerate(graph.edges)}
        self._vindex = {v: i for i, v in enumerate(graph.vertices)}
        self._evals = [(p, t) for t in range(trials) for p in self.primes]
        self._coords = [self._sample(p, t) for p, t in self._evals]
        self._rows: list[dict] = [{} for _ in self._evals]
        self._cache: dict[int, int] = {}

    # -- realisations ------------------------------------------------------

    def _sample(self, p: int, trial: int) -> dict:
        rng = random.Random(f"matroid:{self.seed}:{p}:{trial}")
        return {v: (rng.randrange(p), rng.randrange(p)) for v in self.graph.vertices}

    def row(self, k: int, e: Edge) -> list:
        """Row of ``e`` in the rigidity matrix of evaluation ``k``."""
        cached = self._rows[k].get(e)
        if cached is not None:
            return cached
        p, _ = self._evals[k]
        coords = self._coords[k]
        r = [0] * (2 * self.graph.n)
        i, j = 2 * self._vindex[e.u], 2 * self._vindex[e.v]
        r[i], r[i + 1], r[j], r[j + 1] = edge_row_entries(e, coords[e.u], coords[e.v], p)
        self._rows[k][e] = r
        return r

    @property
    def evaluations(self) -> list[tuple[int, int]]:
        return list(self._evals)

    # -- rank ----------------------------------------------------------------

    def _edges(self, s: Iterable | None) -> list[Edge]:
        if s is None:
            return list(self.graph.edges)
        es = {as_edge(e) for e in s}
        for e in es:
            if e not in self._index:
                raise PreconditionViolated(f"{e} is not an edge of the graph")
        return sorted(es, key=self._index.__getitem__)

    def _mask(self, es: Iterable[Edge]) -> int:
        m = 0
        for e in es:
            m |= 1 << self._index[e]
        return m

    def upper_bound(self, es: Sequence[Edge]) -> int:
        """Rank bound from the trivial motions of each connected piece of ``G[S]``."""
        parent: dict = {}

        def find(a):
            while parent.setdefault(a, a) != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in es:
            parent[find(e.u)] = find(e.v)
        pieces: dict = {}
        for e in es:
            pieces.setdefault(find(e.u), []).append(e)
        bound = 0
        for part in pieces.values():
            verts = {w for e in part for w in e.ends}
            pure = len({e.kind for e in part}) == 1
            bound += 2 * len(verts) - (3 if pure else 2)
        return min(len(es), bound)

    def rank_at(self, k: int, s: Iterable | None = None) -> int:
        """Rank of ``S`` at the single evaluation ``k`` (no maximisation)."""
        es = self._edges(s)
        ech = ModEchelon(self._evals[k][0], 2 * self.graph.n)
        for e in es:
            ech.add(e, self.row(k, e))
        return ech.rank

    def rank(self, s: Iterable | None = None) -> int:
        es = self._edges(s)
        key = self._mask(es)
        if key in self._cache:
            return self._cache[key]
        bound = self.upper_bound(es)
        best = 0
        for k in range(len(self._evals)):
            ech = ModEchelon(self._evals[k][0], 2 * self.graph.n)
            for e in es:
                ech.add(e, self.row(k, e))
                if ech.rank >= bound:
                    break
            best = max(best, ech.rank)
            if best >= bound:
                break
        self._cache[key] = best
        return best

    def is_independent(self, s: Iterable | None = None) -> bool:
        es = self._edges(s)
        return self.rank(es) == len(es)

    # -- circuits ------------------------------------------------------------

    def find_circuit(self, s: Iterable | None = None) -> frozenset:
        """A circuit inside the dependent set ``S`` by element elimination."""
        es = self._edges(s)
        if self.is_independent(es):
            raise InputIndependent("edge set is independent")
        current = list(es)
        for e in es:
            trial = [f for f in current if f != e]
            if not self.is_independent(trial):
                current = trial
        return frozenset(current)

    def fundamental_circuit(self, basis: Iterable, e: Edge) -> frozenset:
        b = self._edges(basis)
        e = as_edge(e)
        if e in b:
            raise PreconditionViolated(f"{e} already lies in the independent set")
        if not self.is_independent(b):
            raise PreconditionViolated("basis-like set is dependent")
        if self.is_independent(b + [e]):
            raise NotDependentAfterAdding(f"{e} is independent of the given set")
        return self.find_circuit(b + [e])

    # -- basis and fundamental circuits by linear algebra ----------------------

    def greedy_basis(self, s: Iterable | None = None, order: Sequence[Edge] | None = None) -> tuple[int, list[Edge]]:
        """``(k, B)``: a greedy basis ``B`` of ``S`` found at evaluation ``k``.

        Edges are scanned in canonical order unless ``order`` is given.  The
        evaluation attaining the maximal rank is used, so ``B`` is a basis of
        ``S`` in the generic matroid (with the oracle's one-sided error).
        """
        es = self._edges(s) if order is None else [as_edge(e) for e in order]
        target = self.rank(es)
        for k in range(len(self._evals)):
            ech = ModEchelon(self._evals[k][0], 2 * self.graph.n)
            for e in es:
                ech.add(e, self.row(k, e))
                if ech.rank == target:
                    break
            if ech.rank == target:
                return k, list(ech.basis)
        raise AssertionError("no evaluation reaches the cached rank")

    def basis_and_supports(self, es: Sequence[Edge], evaluations: int | None = None) -> tuple[list[Edge], dict]:
        """One elimination pass per evaluation giving a greedy basis of ``es``
        and the fundamental circuit of every other element.

        An element rejected by the greedy scan is written over the basis
        accepted so far, which is part of the final basis, so the support of
        that combination is its fundamental circuit.  Supports are united over
        up to ``evaluations`` evaluations (default: one per prime) that
        produce the same basis; further evaluations are only consulted while
        the rank could still be too small.
        """
        es = list(es)
        limit = len(self.primes) if evaluations is None else evaluations
        bound = self.upper_bound(es)
        best: list[int] | None = None
        supports: dict[int, set] = {}
        used = 0
        for k in range(len(self._evals)):
            if best is not None and len(best) >= bound and used >= limit:
                break
            ech = ModEchelon(self._evals[k][0], 2 * self.graph.n)
            found: dict[int, dict] = {}
            for i, e in enumerate(es):
                combo = ech.insert(i, self.row(k, e))
                if combo is not None:
                    found[i] = combo
            basis = ech.basis
            if best is None or len(basis) > len(best):
                best, used = basis, 0
                supports = {i: {i} for i in found}
            elif basis != best:
                continue
            if used >= limit:
                continue
            used += 1
            for i, combo in found.items():
                supports[i].update(combo)
        self._cache[self._mask(es)] = len(best)
        return [es[i] for i in best], {es[i]: frozenset(es[j] for j in c) for i, c in supports.items()}

    def fundamental_supports(self, basis: Sequence[Edge], others: Iterable[Edge], evaluations: int | None = None) -> dict:
        """Fundamental circuits of each ``e`` in ``others`` w.r.t. the basis.

        Computed from the coefficients expressing the row of ``e`` over the
        basis rows.  A coefficient of a generic linear combination can only
        vanish at special points, never appear, so supports are united over
        the evaluations at which ``basis`` is independent.  ``evaluations``
        limits how many evaluations are consulted (default: one per prime).
        """
        others = list(others)
        limit = len(self.primes) if evaluations is None else evaluations
        out = {e: {e} for e in others}
        used = 0
        for k in range(len(self._evals)):
            if used >= limit:
                break
            ech = ModEchelon(self._evals[k][0], 2 * self.graph.n)
            ok = all(ech.add(b, self.row(k, b)) for b in basis)
            if not ok:
                continue
            used += 1
            for e in others:
                combo = ech.express(self.row(k, e))
                if combo is None:
                    # basis is not spanning e here; e would be outside the closure
                    continue
                out[e].update(combo)
        return {e: frozenset(c) for e, c in out.items()}


def rank(view: MatroidView, s: Iterable | None = None) -> int:
    return view.rank(s)


def is_independent(view: MatroidView, s: Iterable | None = None) -> bool:
    return view.is_independent(s)


def find_circuit(view: MatroidView, s: Iterable | None = None) -> frozenset:
    return view.find_circuit(s)


def fundamental_circuit(view: MatroidView, basis: Iterable, e: Edge) -> frozenset:
    return view.fundamental_circuit(basis, e)
