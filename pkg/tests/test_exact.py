import random
from itertools import product

import pytest

from delball.exact import (
    EnumerationBudgetError,
    ball_size,
    ball_size_all,
    canonical_ball_size,
    enumerate_ball,
    enumeration_budget,
)
from delball.words import Word, canonical_word, parse_word


def texts(ball):
    return sorted(word.text() for word in ball)


def test_enumerate_ball_examples():
    assert texts(enumerate_ball(parse_word("0101"), 1)) == ["001", "010", "011", "101"]
    assert texts(enumerate_ball(parse_word("0000"), 2)) == ["00"]
    word = parse_word("0123", 4)
    assert enumerate_ball(word, 4) == {Word((), 4)}
    assert enumerate_ball(word, -1) == set()
    assert enumerate_ball(word, 5) == set()


def test_enumerate_ball_budget():
    word = Word(tuple(i % 2 for i in range(16)), 2)
    with pytest.raises(EnumerationBudgetError):
        enumerate_ball(word, 8, budget=100)
    assert len(enumerate_ball(word, 8, budget=13000)) > 0


def test_budget_env_override(monkeypatch):
    monkeypatch.delenv("DELBALL_ENUM_BUDGET", raising=False)
    assert enumeration_budget() == 2_000_000
    monkeypatch.setenv("DELBALL_ENUM_BUDGET", "50")
    assert enumeration_budget() == 50
    word = Word(tuple(i % 2 for i in range(12)), 2)
    with pytest.raises(EnumerationBudgetError):
        enumerate_ball(word, 6)
    monkeypatch.setenv("DELBALL_ENUM_BUDGET", "zero")
    with pytest.raises(ValueError):
        enumeration_budget()


def test_ball_size_table_values():
    assert ball_size(parse_word("000000011022200000333333"), 7) == 326
    assert ball_size(parse_word("000000011233300000111111"), 7) == 378
    assert ball_size(parse_word("0011"), 1) == 2


def test_ball_size_conventions():
    word = parse_word("0102", 3)
    assert ball_size(word, -1) == 0
    assert ball_size(word, 5) == 0
    assert ball_size(word, 4) == 1
    assert ball_size(word, 0) == 1
    empty = Word((), 3)
    assert ball_size(empty, 0) == 1
    assert ball_size(empty, 1) == 0


def test_ball_size_all_matches_pointwise():
    rng = random.Random(5)
    for _ in range(50):
        q = rng.randint(1, 4)
        word = Word(tuple(rng.randrange(q) for _ in range(rng.randint(0, 12))), q)
        sizes = ball_size_all(word)
        assert len(sizes) == len(word) + 1
        for t in range(len(word) + 1):
            assert sizes[t] == ball_size(word, t)


def test_dp_equals_enumeration_exhaustive_binary():
    for n in range(0, 8):
        for bits in product((0, 1), repeat=n):
            word = Word(bits, 2)
            sizes = ball_size_all(word)
            for t in range(n + 1):
                assert sizes[t] == len(enumerate_ball(word, t))


def test_dp_equals_enumeration_random():
    rng = random.Random(6)
    for _ in range(200):
        q = rng.randint(1, 4)
        n = rng.randint(0, 10)
        word = Word(tuple(rng.randrange(q) for _ in range(n)), q)
        t = rng.randint(-1, n + 1)
        assert ball_size(word, t) == len(enumerate_ball(word, t))


def test_canonical_ball_size_table_rows():
    assert canonical_ball_size((6, 3, 1, 4, 4, 6), 3, 7) == 434
    assert canonical_ball_size((4, 3, 3, 4, 5, 5), 3, 7) == 625
    assert canonical_ball_size((7,), 4, 0) == 1


def test_canonical_ball_size_validation():
    with pytest.raises(ValueError):
        canonical_ball_size((2, 2), 1, 1)
    with pytest.raises(ValueError):
        canonical_ball_size((2, 0), 3, 1)


def test_canonical_ball_size_matches_dp():
    rng = random.Random(7)
    for _ in range(150):
        q = rng.randint(2, 5)
        lengths = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 8)))
        sizes = ball_size_all(canonical_word(lengths, q))
        n = sum(lengths)
        for t in range(-1, n + 2):
            expected = sizes[t] if 0 <= t <= n else 0
            assert canonical_ball_size(lengths, q, t) == expected
