"""Exact row reduction over prime fields and the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Sequence

# Two 62-bit primes (the largest below 2**62).
PRIME_A = 4611686018427387847
PRIME_B = 4611686018427387817
PRIMES = (PRIME_A, PRIME_B)


class ModEchelon:
    """Incremental row echelon form over GF(p).

    Rows are added one at a time.  Each stored pivot row remembers how it is
    written in terms of the original rows that were accepted as independent,
    so any dependent row can be expressed as a combination of accepted rows.
    That combination's support is a fundamental circuit.
    """

    __slots__ = ("p", "ncols", "_pivots", "basis")

    def __init__(self, p: int, ncols: int):
        self.p = p
        self.ncols = ncols
        # (pivot column, normalised row, combination over basis labels)
        self._pivots: list[tuple[int, list, dict]] = []
        self.basis: list[Hashable] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def _reduce(self, row: Sequence[int], track: bool):
        p = self.p
        r = [a % p for a in row]
        combo: dict = {}
        for col, prow, pcombo in self._pivots:
            f = r[col]
            if f:
                r = [(a - f * b) % p for a, b in zip(r, prow)]
                if track:
                    for k, c in pcombo.items():
                        combo[k] = (combo.get(k, 0) + f * c) % p
        return r, combo

    def add(self, label: Hashable, row: Sequence[int]) -> bool:
        """Insert ``row``; return whether it was independent of the rows so far."""
        return self.insert(label, row) is None

    def insert(self, label: Hashable, row: Sequence[int]) -> dict | None:
        """Insert ``row``; return ``None`` if it was independent, else its
        coefficients over the accepted rows."""
        r, combo = self._reduce(row, track=True)
        col = next((i for i, a in enumerate(r) if a), None)
        if col is None:
            return {k: c for k, c in combo.items() if c}
        p = self.p
        inv = pow(r[col], p - 2, p)
        r = [a * inv % p for a in r]
        # r = row - sum(combo) ; pivot row = inv * r
        own = {k: (-c * inv) % p for k, c in combo.items() if c}
        own[label] = inv
        self._pivots.append((col, r, own))
        self.basis.append(label)
        return None

    def express(self, row: Sequence[int]) -> dict | None:
        """Coefficients writing ``row`` over accepted rows, or ``None`` if independent."""
        r, combo = self._reduce(row, track=True)
        if any(r):
            return None
        return {k: c for k, c in combo.items() if c}

    def is_dependent(self, row: Sequence[int]) -> bool:
        r, _ = self._reduce(row, track=False)
        return not any(r)


def rank_mod(rows: Iterable[Sequence[int]], p: int, bound: int | None = None) -> int:
    """Rank of ``rows`` over GF(p); stops early once ``bound`` is reached."""
    p_rows = [list(r) for r in rows]
    if not p_rows:
        return 0
    ech = ModEchelon(p, len(p_rows[0]))
    for i, r in enumerate(p_rows):
        ech.add(i, r)
        if bound is not None and ech.rank >= bound:
            break
    return ech.rank


def rank_fraction(rows: Iterable[Sequence]) -> int:
    """Exact rank over the rationals by fraction Gaussian elimination."""
    m = [[Fraction(a) for a in r] for r in rows]
    if not m:
        return 0
    rank = 0
    ncols = len(m[0])
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for i in range(rank + 1, len(m)):
            f = m[i][col]
            if f:
                f = f / pr[col]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        rank += 1
        if rank == len(m):
            break
    return rank
