"""Ground-truth deletion-ball sizes.

The ball of a word X under t deletions is the set of distinct strings
reachable by deleting exactly t symbols.  Conventions used throughout:
the ball is empty for t < 0 or t > n, and is the singleton {empty word}
for t = n.

Two independent routes compute the ball size:

* ``enumerate_ball`` materializes the set itself.  It refuses (budget
  guard) once the number of candidate subsequences C(n, t) grows past a
  configurable limit, because every candidate is generated.
* ``ball_size`` runs a distinct-subsequence dynamic program and is the
  workhorse: O(n * n) big-integer operations, no enumeration.

``canonical_ball_size`` is a third route, valid only for words whose run
symbols increase cyclically; it recurses on the run-length vector alone.
"""

from __future__ import annotations

import os
from itertools import combinations
from math import comb

from .words import Word

DEFAULT_ENUM_BUDGET = 2_000_000
ENUM_BUDGET_ENV = "DELBALL_ENUM_BUDGET"


class EnumerationBudgetError(RuntimeError):
    """enumerate_ball would generate more candidates than the budget allows."""


def enumeration_budget() -> int:
    """Active candidate budget: DELBALL_ENUM_BUDGET if set, else the default."""
    raw = os.environ.get(ENUM_BUDGET_ENV)
    if raw is None:
        return DEFAULT_ENUM_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENUM_BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENUM_BUDGET_ENV} must be positive, got {value}")
    return value


def enumerate_ball(word: Word, t: int, budget: int | None = None) -> set[Word]:
    """The set of distinct words reachable from ``word`` by exactly t deletions.

    Raises EnumerationBudgetError when C(n, t) exceeds the budget.
    """
    n = len(word)
    if t < 0 or t > n:
        return set()
    if budget is None:
        budget = enumeration_budget()
    candidates = comb(n, t)
    if candidates > budget:
        raise EnumerationBudgetError(
            f"C({n}, {t}) = {candidates} candidate subsequences exceed budget {budget}"
        )
    q = word.alphabet_size
    symbols = word.symbols
    keep = n - t
    return {Word(kept, q) for kept in combinations(symbols, keep)}


def _distinct_subsequence_counts(word: Word) -> list[int]:
    """counts[m] = number of distinct length-m subsequences of ``word``.

    Row update: appending position i turns every distinct length-(m-1)
    subsequence of the prefix into a length-m one; strings already produced
    the previous time this symbol was appended are subtracted via the row
    snapshot taken just before that previous occurrence.
    """
    n = len(word)
    row = [1] + [0] * n
    before_prev: dict[int, list[int]] = {}
    for s in word.symbols:
        old = row[:]
        sub = before_prev.get(s)
        for m in range(n, 0, -1):
            gain = old[m - 1] - (sub[m - 1] if sub is not None else 0)
            if gain:
                row[m] = old[m] + gain
        before_prev[s] = old
    return row


def ball_size(word: Word, t: int) -> int:
    """|ball(word, t)| by dynamic programming; 0 outside 0 <= t <= n."""
    n = len(word)
    if t < 0 or t > n:
        return 0
    return _distinct_subsequence_counts(word)[n - t]


def ball_size_all(word: Word) -> list[int]:
    """Ball sizes for every t in [0, n], computed in a single DP pass."""
    counts = _distinct_subsequence_counts(word)
    return counts[::-1]


def canonical_ball_size(lengths: tuple[int, ...] | list[int], q: int, t: int) -> int:
    """Ball size of canonical_word(lengths, q), by peeling the first run.

    Splits the ball by how many leading runs a subsequence skips before its
    first kept symbol: skipping the first j runs (plus i extra symbols of
    run j+1, 0 <= i < x_1 choices of where the peeling stopped) leaves the
    suffix profile with run j+1 shortened by one.  A trailing +1 accounts
    for subsequences erased entirely out of the first run when t > n - x_1.
    Equals ball_size on the decoded word for every t; only run lengths and
    the alphabet size enter, so memoization keys on (lengths, t).
    """
    lengths = tuple(lengths)
    if q < 2:
        raise ValueError("canonical words need an alphabet of at least 2")
    if any(x < 1 for x in lengths):
        raise ValueError("run lengths must be positive")
    memo: dict[tuple[tuple[int, ...], int], int] = {}

    def peel(xs: tuple[int, ...], t: int) -> int:
        n = sum(xs)
        if t < 0 or t > n:
            return 0
        if t == 0 or t == n:
            return 1
        key = (xs, t)
        cached = memo.get(key)
        if cached is not None:
            return cached
        r = len(xs)
        q1 = min(r, q)
        x1 = xs[0]
        total = peel(xs[1:], t)
        skipped = 0
        for j in range(1, q1):
            skipped += xs[j - 1]
            sub = (xs[j] - 1,) + xs[j + 1 :]
            if sub[0] == 0:
                sub = sub[1:]
            for i in range(x1):
                total += peel(sub, t - skipped + i)
        if t > n - x1:
            total += 1
        memo[key] = total
        return total

    return peel(lengths, t)
