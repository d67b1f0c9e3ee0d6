"""Exact sparse tensors in V^{(x) m} and the invariant tensors of wave graphs.

A tensor is a map from index words (length-m tuples over 1..n) to nonzero
exact coefficients. Index words compare lexicographically, which is the
order used for leading terms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product as cartesian
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .graphs import WaveGraph, check_valid

IndexWord = tuple[int, ...]
Permutation = tuple[int, ...]


class EmptyTensorError(ValueError):
    pass


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class SparseTensor:
    """Immutable sparse tensor; terms are kept in lexicographic order."""

    __slots__ = ("n", "m", "_terms")

    def __init__(self, n: int, m: int, terms: Mapping[IndexWord, Rational] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[IndexWord, Rational] = {}
        for idx, c in items:
            idx = tuple(idx)
            if len(idx) != m or any(not 1 <= a <= n for a in idx):
                raise ValueError(f"index word {idx} is not of length {m} over 1..{n}")
            acc[idx] = acc.get(idx, 0) + c
        self.n = n
        self.m = m
        self._terms = {k: _normalize(acc[k]) for k in sorted(acc) if acc[k] != 0}

    @classmethod
    def _raw(cls, n: int, m: int, acc: dict) -> SparseTensor:
        # acc is trusted: well-formed keys, may contain zeros
        t = cls.__new__(cls)
        t.n, t.m = n, m
        t._terms = {k: _normalize(acc[k]) for k in sorted(acc) if acc[k] != 0}
        return t

    @classmethod
    def unit(cls, n: int) -> SparseTensor:
        """The scalar 1 in the m = 0 tensor power."""
        return cls(n, 0, {(): 1})

    @classmethod
    def zero(cls, n: int, m: int) -> SparseTensor:
        return cls(n, m)

    @property
    def terms(self) -> Mapping[IndexWord, Rational]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[IndexWord, Rational]]:
        return iter(self._terms.items())

    def __getitem__(self, idx: Sequence[int]):
        return self._terms.get(tuple(idx), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseTensor):
            return NotImplemented
        return (self.n, self.m, self._terms) == (other.n, other.m, other._terms)

    def __hash__(self):
        return hash((self.n, self.m, tuple(self._terms.items())))

    def _check_same(self, other: SparseTensor) -> None:
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError(f"shape mismatch: (n,m)=({self.n},{self.m}) vs ({other.n},{other.m})")

    def __add__(self, other: SparseTensor) -> SparseTensor:
        self._check_same(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return SparseTensor._raw(self.n, self.m, acc)

    def __neg__(self) -> SparseTensor:
        return SparseTensor._raw(self.n, self.m, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: SparseTensor) -> SparseTensor:
        return self + (-other)

    def scale(self, c) -> SparseTensor:
        return SparseTensor._raw(self.n, self.m, {k: c * v for k, v in self._terms.items()})

    def __repr__(self) -> str:
        shown = ", ".join(f"{''.join(map(str, k))}: {c}" for k, c in list(self)[:6])
        more = ", ..." if len(self) > 6 else ""
        return f"SparseTensor(n={self.n}, m={self.m}, {{{shown}{more}}})"

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m,
                "terms": [{"idx": list(k), "coeff": str(c)} for k, c in self]}

    @classmethod
    def from_json(cls, obj) -> SparseTensor:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["n"], obj["m"], [(tuple(t["idx"]), Fraction(t["coeff"])) for t in obj["terms"]])


def permutation_sign(p: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation (any distinct values)."""
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def wedge_form(n: int) -> SparseTensor:
    """x_1 ^ ... ^ x_n expanded over the monomial basis."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return SparseTensor._raw(n, n, {p: permutation_sign(p) for p in permutations(range(1, n + 1))})


def product(a: SparseTensor, b: SparseTensor) -> SparseTensor:
    if a.n != b.n:
        raise ValueError(f"cannot multiply tensors over n={a.n} and n={b.n}")
    return SparseTensor._raw(a.n, a.m + b.m, {x + y: c * d for x, c in a for y, d in b})


# Permutations of tensor positions, one-line notation over 1..m.

def identity_permutation(m: int) -> Permutation:
    return tuple(range(1, m + 1))


def from_cycles(m: int, *cycles: Sequence[int]) -> Permutation:
    img = list(range(1, m + 1))
    for cyc in cycles:
        if any(not 1 <= a <= m for a in cyc):
            raise ValueError(f"cycle {tuple(cyc)} leaves 1..{m}")
        for i, a in enumerate(cyc):
            img[a - 1] = cyc[(i + 1) % len(cyc)]
    if sorted(img) != list(range(1, m + 1)):
        raise ValueError(f"cycles {cycles} do not define a permutation of 1..{m}")
    return tuple(img)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q: i -> p(q(i))."""
    if len(p) != len(q):
        raise ValueError("permutations of different sizes")
    return tuple(p[q[i] - 1] for i in range(len(q)))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, a in enumerate(p, 1):
        inv[a - 1] = i
    return tuple(inv)


def permute_tensor(t: SparseTensor, sigma: Sequence[int]) -> SparseTensor:
    """Move the tensor factor at position p to position sigma(p)."""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, t.m + 1)):
        raise ValueError(f"{list(sigma)} is not a permutation of 1..{t.m}")
    acc = {}
    for w, c in t:
        out = [0] * t.m
        for p, a in enumerate(w):
            out[sigma[p] - 1] = a
        acc[tuple(out)] = c
    return SparseTensor._raw(t.n, t.m, acc)


def leading_term(t: SparseTensor) -> tuple[IndexWord, Rational]:
    if not t:
        raise EmptyTensorError("zero tensor has no leading term")
    return next(iter(t))


# Orientations of wave graphs

@dataclass(frozen=True)
class Orientation:
    """A wave graph with a total order on every component.

    ``orders[j]`` lists the vertices of ``graph.components[j]`` in their
    directed order.
    """

    graph: WaveGraph
    orders: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        orders = tuple(tuple(o) for o in self.orders)
        object.__setattr__(self, "orders", orders)
        if len(orders) != len(self.graph.components):
            raise ValueError("need exactly one order per component")
        for comp, o in zip(self.graph.components, orders):
            if sorted(o) != list(comp):
                raise ValueError(f"order {list(o)} is not a permutation of component {list(comp)}")

    @classmethod
    def canonical(cls, g: WaveGraph) -> Orientation:
        return cls(g, g.components)


def orientations(g: WaveGraph) -> Iterator[Orientation]:
    """All (n!)^k orientations; the inversion-free one comes first."""
    for orders in cartesian(*(permutations(c) for c in g.components)):
        yield Orientation(g, orders)


def inversions(o: Orientation) -> int:
    return sum(sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
               for p in o.orders)


def basis_term(o: Orientation) -> IndexWord:
    """Position v holds the ordinal of vertex v inside its directed component."""
    word = [0] * o.graph.m
    for order in o.orders:
        for ordinal, v in enumerate(order, 1):
            word[v - 1] = ordinal
    return tuple(word)


def invariant_tensor(g: WaveGraph) -> SparseTensor:
    """Signed sum of b_g over all orientations g of ``g``."""
    check_valid(g)
    acc: dict[IndexWord, int] = {}
    for o in orientations(g):
        w = basis_term(o)
        acc[w] = acc.get(w, 0) + (-1) ** inversions(o)
    return SparseTensor._raw(g.n, g.m, acc)


def wave_permutation(g: WaveGraph) -> Permutation:
    """Send block j, slot r of the k-fold wedge product to the r-th vertex of component j."""
    return tuple(v for c in g.components for v in c)


def invariant_tensor_by_wedges(g: WaveGraph) -> SparseTensor:
    """The same tensor built as a permuted tensor power of the wedge form."""
    check_valid(g)
    t = SparseTensor.unit(g.n)
    omega = wedge_form(g.n)
    for _ in g.components:
        t = product(t, omega)
    return permute_tensor(t, wave_permutation(g))
