from itertools import product

import pytest
from hypothesis import given, strategies as st

from wavebasis.ltris import (
    GameState, IllegalMove, StandardTableau, drop, play, tableau_to_word, transcript, word_to_tableau,
)
from wavebasis.partitions import hook_count, conjugate, tau
from wavebasis.words import enumerate_balanced, is_lattice, iter_lattice, parse_word

import oracles


def test_drop_examples():
    s = drop(GameState.empty(3), 1)
    assert (s.heights, s.cleared) == ((1, 0, 0), 0)
    s = drop(GameState(3, (1, 1, 0)), 3)
    assert (s.heights, s.cleared) == ((0, 0, 0), 1)
    with pytest.raises(IllegalMove) as exc:
        drop(GameState(3, (1, 0, 0)), 3)
    assert exc.value.column == 3


def test_drop_out_of_range():
    with pytest.raises(IllegalMove):
        GameState.empty(2).drop(3)


def test_play_examples():
    s = play(parse_word("121323"), 3)
    assert (s.heights, s.cleared) == ((0, 0, 0), 2)
    s = play(parse_word("123"), 3)
    assert (s.heights, s.cleared) == ((0, 0, 0), 1)
    with pytest.raises(IllegalMove) as exc:
        play(parse_word("22"), 2)
    assert exc.value.position == 1


def test_play_log_levels():
    s = play(parse_word("112233"), 3)
    assert [(mv.column, mv.level) for mv in s.log] == [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)]


def _check_state(s):
    h = s.heights
    assert all(a >= b for a, b in zip(h, h[1:])) and h[-1] == 0
    assert sum(h) + s.n * s.cleared == s.moves


@pytest.mark.parametrize("n, k", [(n, k) for n in range(1, 5) for k in range(4)])
def test_balanced_games_end_empty(n, k):
    for w in enumerate_balanced(n, k):
        s = play(w, n)
        assert s.heights == (0,) * n and s.cleared == k
        _check_state(s)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_playable_iff_lattice(n):
    for length in range(9):
        for w in product(range(1, n + 1), repeat=length):
            try:
                s = GameState.empty(n)
                for a in w:
                    s = s.drop(a)
                    _check_state(s)
                playable = True
            except IllegalMove:
                playable = False
            assert playable == is_lattice(w, n)


@pytest.mark.parametrize("word, rows", [
    ("112233", [[1, 3, 5], [2, 4, 6]]),
    ("123", [[1, 2, 3]]),
    ("1122", [[1, 3], [2, 4]]),
    ("121323", [[1, 2, 4], [3, 5, 6]]),
])
def test_word_to_tableau_examples(word, rows):
    w = parse_word(word)
    n = max(w)
    t = word_to_tableau(w, n)
    assert t.to_json() == rows
    assert tableau_to_word(t) == w


def test_tableau_to_word_examples():
    assert tableau_to_word(StandardTableau(((1, 2), (3, 4)))) == (1, 2, 1, 2)
    assert tableau_to_word(StandardTableau(((1, 2, 3),))) == (1, 2, 3)
    with pytest.raises(ValueError):
        tableau_to_word(StandardTableau(((1, 2), (3,))))


def test_word_to_tableau_rejects_bad_words():
    with pytest.raises(ValueError):
        word_to_tableau((1, 2, 2, 1), 2)
    with pytest.raises(ValueError):
        word_to_tableau((1, 1, 2), 2)


def test_standard_tableau_validation():
    with pytest.raises(ValueError):
        StandardTableau(((1, 3), (2,), (4, 5)))
    with pytest.raises(ValueError):
        StandardTableau(((2, 1),))
    with pytest.raises(ValueError):
        StandardTableau(((1, 2), (1, 3)))
    t = StandardTableau(((1, 2, 4), (3,)))
    assert t.shape == (3, 1) and t.transpose().to_json() == [[1, 3], [2], [4]]


@pytest.mark.parametrize("n, k", [(n, k) for n in range(1, 5) for k in range(4)])
def test_rectangular_bijection(n, k):
    ws = enumerate_balanced(n, k)
    tabs = [word_to_tableau(w, n) for w in ws]
    assert [tableau_to_word(t) for t in tabs] == ws
    assert len(set(tabs)) == hook_count((n,) * k)
    if n * k <= 9:
        everything = {StandardTableau(rows) for rows in oracles.standard_tableaux((n,) * k)}
        assert set(tabs) == everything


@pytest.mark.parametrize("n", [2, 3, 4])
def test_game_records_count_components(n):
    # records ending in state lam are the standard tableaux of the conjugate of tau(lam)
    for m in range(8):
        by_state = {}
        for w in iter_lattice(n, m):
            s = play(w, n)
            by_state.setdefault(s.shape, set()).add(s.record())
        for lam, records in by_state.items():
            shape = conjugate(tau(lam, m, n))
            assert all(r.shape == shape for r in records)
            assert len(records) == hook_count(shape)


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 3))), st.data())
def test_round_trip_random(nk, data):
    n, k = nk
    w = data.draw(st.sampled_from(enumerate_balanced(n, k)))
    assert tableau_to_word(word_to_tableau(w, n)) == w


def test_transcript_lines():
    lines, state, err = transcript(parse_word("123"), 3)
    assert err is None and state.cleared == 1
    assert lines == ["1: col=1 level=1 heights=(1,0,0) cleared=0",
                     "2: col=2 level=1 heights=(1,1,0) cleared=0",
                     "3: col=3 level=1 heights=(0,0,0) cleared=1"]
    lines, _, err = transcript(parse_word("21"), 2)
    assert lines == [] and err.position == 1
