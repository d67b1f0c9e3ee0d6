"""Partition arithmetic and the representation-theoretic counts built on it.

Partitions are plain tuples of positive integers in weakly decreasing order,
stored in the usual (unrotated) row form. The L-tris picture lives in
column heights: game column ``i`` has height ``parts[i]``, and a full game
row of width ``n`` is a diagram column of length ``n``. Clearing it means
subtracting 1 from every part.
"""

from __future__ import annotations

from math import factorial, prod
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a tuple, with trailing zeros dropped."""
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    for i, p in enumerate(parts):
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"partition parts must be positive integers, got {parts}")
        if i and parts[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
    return tuple(parts)


def weight(shape: Sequence[int]) -> int:
    return sum(shape)


def conjugate(shape: Sequence[int]) -> Partition:
    shape = as_partition(shape)
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0]))


def hooks(shape: Sequence[int]) -> Iterator[int]:
    """Yield the hook length of every cell, row by row."""
    shape = as_partition(shape)
    conj = conjugate(shape)
    for r, row in enumerate(shape):
        for c in range(row):
            yield (row - c - 1) + (conj[c] - r - 1) + 1


def hook_count(shape: Sequence[int]) -> int:
    """Number of standard tableaux of ``shape``, by the hook length formula."""
    shape = as_partition(shape)
    num = factorial(weight(shape))
    den = prod(hooks(shape))
    assert num % den == 0
    return num // den


def partitions_of(total: int, max_part: int | None = None,
                  max_length: int | None = None) -> Iterator[Partition]:
    """All partitions of ``total`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_length == 0:
        return
    rest = None if max_length is None else max_length - 1
    for first in range(min(total, max_part), 0, -1):
        for tail in partitions_of(total - first, first, rest):
            yield (first,) + tail


def addable_positions(mu: Sequence[int], n: int) -> list[int]:
    """0-based rows among the first ``n`` where a box can be added."""
    mu = as_partition(mu)
    out = []
    for i in range(min(len(mu) + 1, n)):
        above = mu[i - 1] if i else None
        here = mu[i] if i < len(mu) else 0
        if above is None or above > here:
            out.append(i)
    return out


def _check_length(shape: Partition, n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if len(shape) >= n:
        raise ValueError(f"partition {list(shape)} has length >= n={n}")


def tensor_step(mu: Sequence[int], n: int) -> set[Partition]:
    """Shapes reachable from ``mu`` by dropping one block and clearing full rows.

    This is the single-box Pieri rule for SL(n): add a box in one of the rows
    1..n, and if the diagram then has ``n`` rows delete its first column.
    """
    mu = as_partition(mu)
    _check_length(mu, n)
    out = set()
    for i in addable_positions(mu, n):
        parts = list(mu) + [0] * (i + 1 - len(mu))
        parts[i] += 1
        if len(parts) == n:
            parts = [p - 1 for p in parts]
        out.add(as_partition(parts))
    return out


def tau(lam: Sequence[int], m: int, n: int) -> Partition:
    """The weight-``m`` shape obtained from ``lam`` by adding full L-tris rows.

    A full row of the width-``n`` field is a column of length ``n`` in row
    form, so this adds ``(m - |lam|) / n`` to each of the first ``n`` parts.
    """
    lam = as_partition(lam)
    _check_length(lam, n)
    extra = m - weight(lam)
    if extra < 0 or extra % n:
        raise ValueError(
            f"need |lambda| <= m and |lambda| = m mod n; got |lambda|={weight(lam)}, m={m}, n={n}")
    q = extra // n
    padded = list(lam) + [0] * (n - len(lam))
    return as_partition(p + q for p in padded)


def dim_irrep(lam: Sequence[int], n: int) -> int:
    """Dimension of the SL(n) irreducible with highest weight ``lam`` (hook-content formula)."""
    lam = as_partition(lam)
    _check_length(lam, n)
    num = 1
    for r, row in enumerate(lam):
        for c in range(row):
            num *= n + c - r
    den = prod(hooks(lam))
    assert num % den == 0
    return num // den


def decompose(n: int, m: int) -> list[tuple[Partition, int]]:
    """Irreducible components of the m-th tensor power of the standard
    representation, as ``(lambda, multiplicity)`` pairs in decreasing
    lexicographic order of ``lambda``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = []
    for w in range(m, -1, -1):
        if (m - w) % n:
            continue
        for lam in partitions_of(w, max_length=n - 1):
            out.append((lam, hook_count(tau(lam, m, n))))
    out.sort(key=lambda pair: pair[0], reverse=True)
    return out


def invariant_dimension(n: int, m: int) -> int:
    """Dimension of the SL(n)-invariants in the m-th tensor power of the standard representation."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if m % n:
        return 0
    k = m // n
    num = factorial(m) * prod(factorial(i) for i in range(1, n))
    den = prod(factorial(k + i) for i in range(n))
    assert num % den == 0
    return num // den
