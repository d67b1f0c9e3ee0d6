"""Exact rational elimination on sparse vectors (dicts keyed by sortable labels)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence


def _primitive(v: dict) -> dict:
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            return v
    return {k: x // g for k, x in v.items()}


def _integral(vector: Mapping[Hashable, object]) -> dict:
    v = {k: Fraction(c) for k, c in vector.items() if c}
    den = lcm(*(x.denominator for x in v.values())) if v else 1
    return {k: int(x * den) for k, x in v.items()}


class RowReducer:
    """Incremental echelon basis: insert vectors one at a time, track the rank.

    Elimination is fraction-free: vectors are scaled to primitive integer
    vectors, and a stored pivot row is used as ``a * v - v[lead] * row``.
    """

    def __init__(self):
        self.pivots: dict[Hashable, dict[Hashable, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def insert(self, vector: Mapping[Hashable, object]) -> bool:
        """Add ``vector``; return True iff it was independent of those before it."""
        v = _primitive(_integral(vector))
        while v:
            lead = min(v)
            row = self.pivots.get(lead)
            if row is None:
                self.pivots[lead] = v
                return True
            a, c = row[lead], v[lead]
            g = gcd(a, c)
            a, c = a // g, c // g
            out = {k: a * x for k, x in v.items()}
            for k, x in row.items():
                y = out.get(k, 0) - c * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            v = _primitive(out)
        return False


def exact_rank(vectors: Iterable[Mapping[Hashable, object]]) -> int:
    r = RowReducer()
    for v in vectors:
        r.insert(v)
    return r.rank


def determinant(rows: Sequence[Sequence[object]]) -> Fraction:
    """Determinant of a square matrix by exact Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in rows]
    size = len(a)
    if any(len(row) != size for row in a):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, size):
                    a[r][c] -= f * a[col][c]
    return det
