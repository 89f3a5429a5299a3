"""Published bounds on deletion-ball sizes, gathered into one report.

For a word with n symbols, r runs and alphabet q under t deletions:

* Levenshtein run bounds:   C(r-t+1, t) <= |ball| <= C(r+t-1, t).
* Calabi-Hartnett maximum:  |ball| <= D(q, n, t), the ball size of the
  length-n word cycling through all q symbols, which maximizes |ball|
  over the whole of the length-n alphabet-q space.
* Hirschberg-Regnier:       sum C(r-t, i) <= |ball|
                            <= sum C(n-t, i) * D(q-1, t, t-i).
* Balanced upper bound:     |ball| <= ball of the balanced word with r
  runs of length ceil(n/r) (pad the last run, then balance).
* Reduced-binary lower bound: |ball| >= ball of the binary word with r-1
  unit runs and one long run (relabel runs to binary, then unbalance).

The last two are computed exactly, not from further closed forms: the
lower bound runs the DP on its witness word, the upper bound evaluates
the balanced closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .balanced import BalancedBallCalculator
from .binomials import binomial
from .exact import ball_size, ball_size_all
from .words import Word, canonical_word, encode_runs, unbalanced_binary_word

COLUMN_ORDER = (
    "exact",
    "lev_lower",
    "lev_upper",
    "hr_lower",
    "hr_upper",
    "ch_upper",
    "new_lower",
    "new_upper",
)


def levenshtein_bounds(r: int, t: int) -> tuple[int, int]:
    """(C(r-t+1, t), C(r+t-1, t)); out-of-range binomials vanish."""
    return binomial(r - t + 1, t), binomial(r + t - 1, t)


@lru_cache(maxsize=None)
def calabi_hartnett_max(q: int, n: int, t: int) -> int:
    """Largest ball size over all length-n words with alphabet q.

    Attained by any word cycling through all q symbols.  Recursion splits
    on which symbol a subsequence starts with: keeping the first
    occurrence of symbol i discards i earlier symbols.  Base cases: 0
    outside 0 <= t <= n, 1 for t = 0 (the word itself) and for t = n (the
    empty subsequence).
    """
    if q < 1:
        raise ValueError("need q >= 1")
    if t < 0 or t > n or n < 0:
        return 0
    if t == 0 or t == n:
        return 1
    return sum(calabi_hartnett_max(q, n - i - 1, t - i) for i in range(q))


def hirschberg_regnier_bounds(q: int, n: int, r: int, t: int) -> tuple[int, int]:
    """(sum_i C(r-t, i), sum_i C(n-t, i) * D(q-1, t, t-i)) for i in [0, t]."""
    if q < 2:
        raise ValueError("need q >= 2")
    lower = sum(binomial(r - t, i) for i in range(t + 1))
    upper = sum(binomial(n - t, i) * calabi_hartnett_max(q - 1, t, t - i) for i in range(t + 1))
    return lower, upper


def unbalanced_lower_bound(n: int, r: int, t: int) -> int:
    """Ball size of unbalanced_binary_word(n, r): a floor for every r-run word."""
    return ball_size(unbalanced_binary_word(n, r), t)


def balanced_upper_bound(
    q: int, n: int, r: int, t: int, calculator: BalancedBallCalculator | None = None
) -> int:
    """Balanced-word ball size with k = ceil(n / r): a cap for every r-run word.

    Exact (not just a bound) when r divides n.  Pass a calculator to share
    memo tables across many t values; its (k, q) must match.
    """
    if q < 2:
        raise ValueError("need q >= 2")
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    k = -(-n // r)
    if calculator is None:
        calculator = BalancedBallCalculator(k, q)
    elif calculator.k != k or calculator.q != q:
        raise ValueError(
            f"calculator is for (k={calculator.k}, q={calculator.q}), need (k={k}, q={q})"
        )
    return calculator.ball_closed(r, t)


@dataclass(frozen=True)
class BoundReport:
    """Every bound (and optionally the exact value) for one word or parameter set."""

    q: int
    n: int
    r: int
    t: int
    lev_lower: int
    lev_upper: int
    hr_lower: int
    hr_upper: int
    ch_upper: int
    new_lower: int
    new_upper: int
    exact: int | None = None

    def value(self, column: str) -> int | None:
        if column not in COLUMN_ORDER:
            raise ValueError(f"unknown column {column!r}")
        return getattr(self, column)

    def to_json_dict(self) -> dict[str, object]:
        """Plain dict with ball counts as decimal strings (they overflow ints elsewhere)."""
        out: dict[str, object] = {"q": self.q, "n": self.n, "r": self.r, "t": self.t}
        for column in COLUMN_ORDER:
            v = self.value(column)
            if v is not None:
                out[column] = str(v)
        return out

    def csv_row(self, columns: Sequence[str]) -> str:
        """t plus the requested columns, comma-separated, counts in decimal."""
        return ",".join([str(self.t)] + [str(self.value(c)) for c in columns])


def _assemble(
    q: int,
    n: int,
    r: int,
    t: int,
    exact: int | None,
    calculator: BalancedBallCalculator | None,
) -> BoundReport:
    lev_lower, lev_upper = levenshtein_bounds(r, t)
    hr_lower, hr_upper = hirschberg_regnier_bounds(q, n, r, t)
    report = BoundReport(
        q=q,
        n=n,
        r=r,
        t=t,
        lev_lower=lev_lower,
        lev_upper=lev_upper,
        hr_lower=hr_lower,
        hr_upper=hr_upper,
        ch_upper=calabi_hartnett_max(q, n, t),
        new_lower=unbalanced_lower_bound(n, r, t),
        new_upper=balanced_upper_bound(q, n, r, t, calculator),
        exact=exact,
    )
    if exact is not None:
        for low in (report.lev_lower, report.hr_lower, report.new_lower):
            if low > exact:
                raise AssertionError(f"lower bound {low} exceeds exact {exact}: {report}")
        for high in (report.lev_upper, report.hr_upper, report.ch_upper, report.new_upper):
            if high < exact:
                raise AssertionError(f"upper bound {high} below exact {exact}: {report}")
    return report


def report_for_word(
    word: Word,
    t: int,
    with_exact: bool = True,
    calculator: BalancedBallCalculator | None = None,
) -> BoundReport:
    """BoundReport for a concrete word; n, r, q are read off the word."""
    profile = encode_runs(word)
    r = profile.run_count
    if r == 0:
        raise ValueError("no bounds for the empty word")
    exact = ball_size(word, t) if with_exact else None
    return _assemble(word.alphabet_size, len(word), r, t, exact, calculator)


def representative_word(q: int, n: int, r: int) -> Word:
    """Canonical word with r - 1 unit runs then one long run, over alphabet q.

    Used as the witness whose exact ball size parameter-form reports carry:
    for r = 1 and for r = n it is the only run shape available.
    """
    if q < 2:
        raise ValueError("need q >= 2")
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    return canonical_word((1,) * (r - 1) + (n - r + 1,), q)


def report_for_params(
    q: int,
    n: int,
    r: int,
    t: int,
    with_exact: bool = False,
    calculator: BalancedBallCalculator | None = None,
) -> BoundReport:
    """BoundReport for (q, n, r); exact, if requested, is for representative_word."""
    if q < 2:
        raise ValueError("need q >= 2")
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    exact = ball_size(representative_word(q, n, r), t) if with_exact else None
    return _assemble(q, n, r, t, exact, calculator)


def sweep_reports(
    q: int,
    n: int,
    r: int,
    t_values: list[int],
    with_exact: bool = False,
) -> list[BoundReport]:
    """Reports for each t in order, sharing one balanced calculator throughout.

    The exact column, when requested, comes from a single DP pass over
    representative_word rather than one pass per t.
    """
    if q < 2:
        raise ValueError("need q >= 2")
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    calculator = BalancedBallCalculator(-(-n // r), q)
    exact_all = ball_size_all(representative_word(q, n, r)) if with_exact else None
    reports = []
    for t in t_values:
        exact = None
        if exact_all is not None:
            exact = exact_all[t] if 0 <= t <= n else 0
        reports.append(_assemble(q, n, r, t, exact, calculator))
    return reports
