"""Lattice (ballot) words over the alphabet 1..n."""

from __future__ import annotations

import json
from typing import Iterator, Sequence

Word = tuple[int, ...]


def _check_alphabet(letters: Sequence[int], n: int) -> None:
    for pos, a in enumerate(letters, 1):
        if not isinstance(a, int) or not 1 <= a <= n:
            raise ValueError(f"letter {a!r} at position {pos} is outside 1..{n}")


def is_lattice(letters: Sequence[int], n: int) -> bool:
    """True iff every prefix has at least as many j's as (j+1)'s."""
    _check_alphabet(letters, n)
    counts = [0] * (n + 1)
    for a in letters:
        counts[a] += 1
        if a > 1 and counts[a] > counts[a - 1]:
            return False
    return True


def is_balanced(letters: Sequence[int], n: int) -> bool:
    """True iff ``letters`` is a lattice word using each of 1..n equally often."""
    if len(letters) % n:
        return False
    k = len(letters) // n
    return is_lattice(letters, n) and all(letters.count(a) == k for a in range(1, n + 1))


def check_balanced(letters: Sequence[int], n: int) -> Word:
    word = tuple(letters)
    if not is_balanced(word, n):
        raise ValueError(f"{format_word(word, n)!r} is not a balanced lattice word for n={n}")
    return word


def _extend(prefix: list[int], counts: list[int], n: int, target: list[int]) -> Iterator[Word]:
    if counts[1:] == target[1:]:
        yield tuple(prefix)
        return
    for a in range(1, n + 1):
        if counts[a] < target[a] and (a == 1 or counts[a] < counts[a - 1]):
            counts[a] += 1
            prefix.append(a)
            yield from _extend(prefix, counts, n, target)
            prefix.pop()
            counts[a] -= 1


def iter_balanced(n: int, k: int) -> Iterator[Word]:
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    yield from _extend([], [0] * (n + 1), n, [0] + [k] * n)


def enumerate_balanced(n: int, k: int) -> list[Word]:
    """All balanced lattice words with ``k`` copies of each letter, in lexicographic order."""
    return list(iter_balanced(n, k))


def iter_lattice(n: int, length: int) -> Iterator[Word]:
    """All lattice words of the given length (any content), in lexicographic order."""

    def go(prefix: list[int], counts: list[int]) -> Iterator[Word]:
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for a in range(1, n + 1):
            if a == 1 or counts[a] < counts[a - 1]:
                counts[a] += 1
                prefix.append(a)
                yield from go(prefix, counts)
                prefix.pop()
                counts[a] -= 1

    yield from go([], [0] * (n + 1))


def count_balanced(n: int, k: int) -> int:
    return sum(1 for _ in iter_balanced(n, k))


def format_word(word: Sequence[int], n: int) -> str:
    """Digit string for n <= 9, JSON integer array otherwise."""
    if n <= 9:
        return "".join(str(a) for a in word)
    return json.dumps(list(word))


def parse_word(text: str) -> Word:
    """Parse a digit string (``"121323"``) or a JSON array (``"[1,2,1]"``)."""
    text = text.strip()
    if text.startswith("["):
        value = json.loads(text)
        if not all(isinstance(a, int) for a in value):
            raise ValueError(f"word array must hold integers: {text!r}")
        return tuple(value)
    if not text.isdigit() and text:
        raise ValueError(f"word must be a digit string or JSON array: {text!r}")
    return tuple(int(ch) for ch in text)
