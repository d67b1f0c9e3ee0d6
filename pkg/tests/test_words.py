from itertools import product

import pytest
from hypothesis import given, strategies as st

from wavebasis.partitions import invariant_dimension
from wavebasis.words import (
    enumerate_balanced, format_word, is_balanced, is_lattice, iter_lattice, parse_word,
)


@pytest.mark.parametrize("word, expected", [("121323", True), ("112233", True), ("213", False)])
def test_is_lattice_examples(word, expected):
    assert is_lattice(parse_word(word), 3) is expected


def test_is_lattice_rejects_foreign_letters():
    with pytest.raises(ValueError):
        is_lattice((1, 4), 3)
    with pytest.raises(ValueError):
        is_lattice((0,), 3)


def test_enumerate_examples():
    assert [format_word(w, 3) for w in enumerate_balanced(3, 2)] == [
        "112233", "112323", "121233", "121323", "123123"]
    assert enumerate_balanced(2, 1) == [(1, 2)]
    assert enumerate_balanced(4, 0) == [()]


@pytest.mark.parametrize("n, k", [(n, k) for n in range(1, 5) for k in range(4)])
def test_count_matches_dimension(n, k):
    ws = enumerate_balanced(n, k)
    if n >= 2:
        assert len(ws) == invariant_dimension(n, n * k)
    assert ws == sorted(ws)
    assert len(set(ws)) == len(ws)


def test_catalan():
    assert [len(enumerate_balanced(2, k)) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]


@pytest.mark.parametrize("n, k", [(2, 1), (2, 3), (2, 5), (3, 2), (3, 3), (4, 2)])
def test_enumeration_matches_unpruned_filter(n, k):
    brute = [w for w in product(range(1, n + 1), repeat=n * k)
             if all(w.count(a) == k for a in range(1, n + 1)) and is_lattice(w, n)]
    assert enumerate_balanced(n, k) == brute


def test_iter_lattice_matches_filter():
    for n in (1, 2, 3):
        for length in range(6):
            brute = [w for w in product(range(1, n + 1), repeat=length) if is_lattice(w, n)]
            assert list(iter_lattice(n, length)) == brute


@given(st.lists(st.integers(1, 3), max_size=12))
def test_lattice_means_prefix_dominance(letters):
    expected = all(letters[:i].count(j) >= letters[:i].count(j + 1)
                   for i in range(len(letters) + 1) for j in (1, 2))
    assert is_lattice(letters, 3) == expected


def test_balanced():
    assert is_balanced((1, 2, 1, 2), 2)
    assert not is_balanced((1, 1, 2), 2)
    assert not is_balanced((2, 1), 2)


def test_word_formats():
    assert parse_word("121323") == (1, 2, 1, 3, 2, 3)
    assert parse_word("[1, 10, 2]") == (1, 10, 2)
    assert parse_word("") == ()
    assert format_word((1, 2), 2) == "12"
    assert format_word((1, 10), 10) == "[1, 10]"
    with pytest.raises(ValueError):
        parse_word("12a")
