"""n-wave graphs: vertices 1..m split into increasing n-vertex paths whose
N-th edges all lie on page N of a book, with no crossings inside a page."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .words import Word, check_balanced, iter_balanced


@dataclass(frozen=True)
class Diagnosis:
    ok: bool
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class WaveGraph:
    n: int
    m: int
    components: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        comps = tuple(sorted(tuple(c) for c in self.components))
        object.__setattr__(self, "components", comps)

    @property
    def k(self) -> int:
        return len(self.components)

    def edges(self, page: int) -> list[tuple[int, int]]:
        """Edges drawn on ``page`` (1-based): the page-th step of every path."""
        return sorted((c[page - 1], c[page]) for c in self.components if len(c) > page)

    def pages(self) -> dict[int, list[tuple[int, int]]]:
        return {p: self.edges(p) for p in range(1, self.n)}

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "components": [list(c) for c in self.components]}

    @classmethod
    def from_json(cls, obj) -> WaveGraph:
        if isinstance(obj, str):
            obj = json.loads(obj)
        if isinstance(obj, list):
            comps = [tuple(c) for c in obj]
            n = len(comps[0]) if comps else 0
            return cls(n, sum(len(c) for c in comps), tuple(comps))
        return cls(obj["n"], obj["m"], tuple(tuple(c) for c in obj["components"]))


def crosses(e: tuple[int, int], f: tuple[int, int]) -> bool:
    (a, b), (c, d) = sorted(e), sorted(f)
    return a < c < b < d or c < a < d < b


def validate(g: WaveGraph) -> Diagnosis:
    seen = sorted(v for c in g.components for v in c)
    if seen != list(range(1, g.m + 1)):
        return Diagnosis(False, f"components do not partition 1..{g.m}")
    for c in g.components:
        if len(c) != g.n:
            return Diagnosis(False, f"component {list(c)} does not have {g.n} vertices")
        if any(x >= y for x, y in zip(c, c[1:])):
            return Diagnosis(False, f"component {list(c)} is not increasing")
    for page, edges in g.pages().items():
        for i, e in enumerate(edges):
            for f in edges[i + 1:]:
                if crosses(e, f):
                    return Diagnosis(False, f"page-{page} edges {set(e)} and {set(f)} cross")
    return Diagnosis(True)


def check_valid(g: WaveGraph) -> WaveGraph:
    d = validate(g)
    if not d:
        raise ValueError(f"invalid wave graph: {d.message}")
    return g


def stack_matching(word: Sequence[int], low: int) -> list[tuple[int, int]]:
    """Noncrossing matching of the letters ``low``/``low + 1`` in ``word``.

    Each ``low + 1`` is matched to the nearest preceding unmatched ``low``.
    Positions are 1-based and refer to ``word`` itself.
    """
    stack: list[int] = []
    edges = []
    for pos, a in enumerate(word, 1):
        if a == low:
            stack.append(pos)
        elif a == low + 1:
            if not stack:
                raise ValueError(f"letter {low + 1} at position {pos} has no partner")
            edges.append((stack.pop(), pos))
    if stack:
        raise ValueError(f"unmatched letters {low} at positions {stack}")
    return sorted(edges)


def word_to_graph(word: Sequence[int], n: int) -> WaveGraph:
    word = check_balanced(word, n)
    succ = [dict(stack_matching(word, page)) for page in range(1, n)]
    comps = []
    for pos, a in enumerate(word, 1):
        if a != 1:
            continue
        path = [pos]
        for nxt in succ:
            path.append(nxt[path[-1]])
        comps.append(tuple(path))
    return WaveGraph(n, len(word), tuple(comps))


def graph_to_word(g: WaveGraph) -> Word:
    check_valid(g)
    word = [0] * g.m
    for c in g.components:
        for ordinal, v in enumerate(c, 1):
            word[v - 1] = ordinal
    return tuple(word)


def enumerate_graphs(n: int, m: int) -> list[WaveGraph]:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if m < 0 or m % n:
        return []
    return [word_to_graph(w, n) for w in iter_balanced(n, m // n)]


# Rendering

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _fmt(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return s if s not in ("", "-0") else "0"


def render(g: WaveGraph, format: str = "svg", spacing: float = 24.0) -> str:
    """Draw ``g`` as an SVG arc diagram.

    For n = 3 page 1 goes above the spine and page 2 below it; otherwise all
    pages are drawn above, colored per page, with arc heights scaled by page.
    """
    if format != "svg":
        raise ValueError(f"unsupported drawing format {format!r}")
    check_valid(g)
    split = g.n == 3
    pad = spacing
    span = max(g.m - 1, 0) * spacing
    half = span / 2 + spacing
    width = span + 2 * pad
    y0 = half
    height = y0 + (half if split else pad)

    def x(v: int) -> float:
        return pad + (v - 1) * spacing

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<g class="wave-graph" data-n="{g.n}" data-m="{g.m}">',
    ]
    if g.m:
        out.append(f'<line class="spine" x1="{_fmt(x(1))}" y1="{_fmt(y0)}" '
                   f'x2="{_fmt(x(g.m))}" y2="{_fmt(y0)}" stroke="#bbbbbb" stroke-width="0.5"/>')
    for page, edges in g.pages().items():
        below = split and page == 2
        color = "#000000" if split else _PALETTE[(page - 1) % len(_PALETTE)]
        scale = 1.0 if split or g.n == 2 else page / (g.n - 1)
        side = "below" if below else "above"
        for a, b in edges:
            rx = (x(b) - x(a)) / 2
            ry = rx * scale
            sweep = 0 if below else 1
            out.append(
                f'<path class="arc page-{page} {side}" data-edge="{a}-{b}" '
                f'd="M {_fmt(x(a))} {_fmt(y0)} A {_fmt(rx)} {_fmt(ry)} 0 0 {sweep} '
                f'{_fmt(x(b))} {_fmt(y0)}" fill="none" stroke="{color}" stroke-width="1"/>')
    for v in range(1, g.m + 1):
        out.append(f'<circle class="vertex" data-v="{v}" cx="{_fmt(x(v))}" cy="{_fmt(y0)}" r="1.5" fill="#000000"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
