"""The L-tris game: 1x1 blocks dropped on a width-n field, full rows deleted.

A game record is a word over 1..n (the column of each drop). Reading off
where each block landed, with cleared rows put back, turns a record into a
standard tableau; for balanced lattice words the tableau is a k x n
rectangle with entry (r, c) the move that put the r-th block in column c.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .partitions import Partition, as_partition
from .words import Word, check_balanced


class IllegalMove(ValueError):
    def __init__(self, column: int, position: int | None = None, reason: str = ""):
        self.column = column
        self.position = position
        where = f" at move {position}" if position is not None else ""
        super().__init__(f"illegal drop into column {column}{where}: {reason}")


class Move(NamedTuple):
    index: int
    column: int
    level: int


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        as_partition(len(r) for r in rows)
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"tableau entries must be 1..N exactly once: {self.to_json()}")
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if c and row[c - 1] >= x:
                    raise ValueError(f"row {r + 1} is not increasing: {list(row)}")
                if r and rows[r - 1][c] >= x:
                    raise ValueError(f"column {c + 1} is not increasing at row {r + 1}")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def transpose(self) -> StandardTableau:
        if not self.rows:
            return self
        return StandardTableau(tuple(
            tuple(row[c] for row in self.rows if len(row) > c) for c in range(len(self.rows[0]))))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class GameState:
    n: int
    heights: tuple[int, ...]
    cleared: int = 0
    log: tuple[Move, ...] = field(default=(), repr=False)

    @classmethod
    def empty(cls, n: int) -> GameState:
        if n < 1:
            raise ValueError(f"field width must be positive, got {n}")
        return cls(n, (0,) * n)

    @property
    def moves(self) -> int:
        return len(self.log)

    @property
    def shape(self) -> Partition:
        return as_partition(self.heights)

    def drop(self, column: int) -> GameState:
        return drop(self, column)

    def record(self) -> StandardTableau:
        """The tableau whose r-th row lists the moves that landed on level r."""
        levels: dict[int, list[Move]] = {}
        for mv in self.log:
            levels.setdefault(mv.level, []).append(mv)
        rows = []
        for level in range(1, len(levels) + 1):
            rows.append(tuple(mv.index for mv in sorted(levels[level], key=lambda mv: mv.column)))
        return StandardTableau(tuple(rows))


def drop(state: GameState, column: int, position: int | None = None) -> GameState:
    """Drop one block into ``column`` (1-based); return the new state."""
    n = state.n
    if not 1 <= column <= n:
        raise IllegalMove(column, position, f"column outside 1..{n}")
    h = list(state.heights)
    c = column - 1
    if c and h[c] >= h[c - 1]:
        raise IllegalMove(column, position,
                          f"height {h[c]} would reach column {column - 1}'s height {h[c - 1]}")
    h[c] += 1
    mv = Move(state.moves + 1, column, h[c] + state.cleared)
    cleared = state.cleared
    if h[-1] == 1:
        h = [x - 1 for x in h]
        cleared += 1
    return GameState(n, tuple(h), cleared, state.log + (mv,))


def play(word: Sequence[int], n: int) -> GameState:
    state = GameState.empty(n)
    for pos, a in enumerate(word, 1):
        state = drop(state, a, pos)
    return state


def word_to_tableau(word: Sequence[int], n: int) -> StandardTableau:
    word = check_balanced(word, n)
    return play(word, n).record()


def tableau_to_word(t: StandardTableau) -> Word:
    """Read the column index of entries 1, 2, ... of a rectangular tableau."""
    shape = t.shape
    if len(set(shape)) > 1:
        raise ValueError(f"tableau shape {list(shape)} is not rectangular")
    n = shape[0] if shape else 0
    column_of = {x: c + 1 for row in t.rows for c, x in enumerate(row)}
    word = tuple(column_of[i] for i in range(1, t.size + 1))
    if n:
        check_balanced(word, n)
    return word


def transcript(word: Sequence[int], n: int) -> tuple[list[str], GameState | None, IllegalMove | None]:
    """Replay ``word`` and return one text line per successful move.

    Stops at the first illegal move and returns it instead of raising.
    """
    lines = []
    state = GameState.empty(n)
    for pos, a in enumerate(word, 1):
        try:
            state = drop(state, a, pos)
        except IllegalMove as exc:
            return lines, state, exc
        mv = state.log[-1]
        heights = ",".join(str(x) for x in state.heights)
        lines.append(f"{mv.index}: col={mv.column} level={mv.level} "
                     f"heights=({heights}) cleared={state.cleared}")
    return lines, state, None
