"""
Left reversing in BKL_n and the division tests built on it.

A signed word is left-reversed by repeatedly replacing a factor x.y^-1 (x, y
positive letters) with f(x,y)^-1 . f(y,x), where f is the left complement below.
The process ends on a word D^-1 . N with D and N positive; D is empty exactly
when the word's positive part is right-divisible by the letters being reversed
away.

Two evaluators are provided. ``left_reverse`` performs the literal one-step
rewrites and is what the CLI and the worked examples use. ``reverse_pair`` is a
memoised grid evaluator of X . V^-1 used by every hot path (tails, splittings,
normal forms); both produce the same words, which the test suite checks.
"""
from __future__ import annotations

import dataclasses
from functools import lru_cache
from typing import Sequence

from .errors import BudgetExceededError, NotADivisorError, StrandError
from .words import Letter, SignedLetter, Word, as_letters, check_letter, flip_letters

DEFAULT_MAX_STEPS = 10**6

Letters = tuple[Letter, ...]


@dataclasses.dataclass(frozen=True)
class Fraction:
    """The left fraction denominator^-1 . numerator, both positive."""

    denominator: Word
    numerator: Word

    def as_word(self) -> Word:
        return self.denominator.inverse() + self.numerator


@lru_cache(maxsize=None)
def _complement(x: Letter, y: Letter) -> Letters:
    (p, q), (r, s) = x, y
    if x == y:
        return ()
    if q == r:
        return (Letter(p, s),)
    if p == r and q > s:
        return (Letter(s, q),)
    if q == s and p > r:
        return (Letter(r, p),)
    if p < r < q < s:
        return (Letter(r, q), Letter(p, s))
    if r < p < s < q:
        return (Letter(s, q), Letter(r, p))
    return (y,)


def complement(n: int, x: Letter, y: Letter) -> Word:
    """The left complement f_n(x, y), so that f(x,y).x == f(y,x).y in BKL_n."""
    check_letter(x, n)
    check_letter(y, n)
    return Word.positive(n, _complement(Letter(*x), Letter(*y)))


@lru_cache(maxsize=1 << 20)
def reverse_pair(X: Letters, V: Letters) -> tuple[Letters, Letters]:
    """Left-reverse X . V^-1 for positive letter tuples; returns (D, N)."""
    if not X or not V:
        return V, X
    if len(V) == 1:
        # X[:i+1] . W^-1 . N, consuming X from the right
        W: Letters = V
        N: Letters = ()
        for i in range(len(X) - 1, -1, -1):
            if not W:
                return (), X[: i + 1] + N
            x = X[i]
            if len(W) == 1:
                d, m = _complement(x, W[0]), _complement(W[0], x)
            else:
                d, m = reverse_pair((x,), W)
            W, N = d, m + N
        return W, N
    # X . v_k^-1 ... v_1^-1, one denominator letter at a time
    D: Letters = ()
    cur = X
    for y in reversed(V):
        d, cur = reverse_pair(cur, (y,))
        D = d + D
    return D, cur


def fraction_of(items: Sequence[SignedLetter]) -> tuple[Letters, Letters]:
    """(D, N) for an arbitrary signed word, accumulated left to right."""
    D: Letters = ()
    N: Letters = ()
    for s in items:
        if s.sign > 0:
            N = N + (s.letter,)
        else:
            d, N = reverse_pair(N, (s.letter,))
            D = d + D
    return D, N


def _find_leftmost(items: list, start: int) -> int:
    for i in range(max(start, 0), len(items) - 1):
        if items[i].sign > 0 and items[i + 1].sign < 0:
            return i
    return -1


def _find_rightmost(items: list) -> int:
    for i in range(len(items) - 2, -1, -1):
        if items[i].sign > 0 and items[i + 1].sign < 0:
            return i
    return -1


def left_reverse(
    n: int,
    w: Word,
    strategy: str = "leftmost",
    max_steps: int = DEFAULT_MAX_STEPS,
) -> Fraction:
    """Left-reverse ``w`` by one-step rewrites until it reads D^-1 . N."""
    if w.max_strand() > n:
        raise StrandError(f"word uses strand {w.max_strand()} > n = {n}")
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    items = list(w.items)
    steps = 0
    i = _find_leftmost(items, 0) if strategy == "leftmost" else _find_rightmost(items)
    while i >= 0:
        steps += 1
        if steps > max_steps:
            raise BudgetExceededError(
                f"left reversing exceeded {max_steps} steps; this should not happen in BKL_{n}"
            )
        x, y = items[i].letter, items[i + 1].letter
        neg = [SignedLetter(z, -1) for z in reversed(_complement(x, y))]
        pos = [SignedLetter(z, 1) for z in _complement(y, x)]
        items[i : i + 2] = neg + pos
        if strategy == "leftmost":
            i = _find_leftmost(items, i - 1)
        else:
            i = _find_rightmost(items)
    split = next((j for j, s in enumerate(items) if s.sign > 0), len(items))
    den = Word(n, tuple(s.inverse() for s in reversed(items[:split])))
    num = Word(n, tuple(items[split:]))
    return Fraction(den, num)


def right_divides_letter(n: int, w: Word, x: Letter) -> bool:
    check_letter(x, n)
    d, _ = reverse_pair(as_letters(n, w), (Letter(*x),))
    return not d


def right_quotient(n: int, w: Word, x: Letter) -> Word:
    """The word N(w . x^-1), which satisfies N . x == w whenever x right-divides w."""
    check_letter(x, n)
    d, m = reverse_pair(as_letters(n, w), (Letter(*x),))
    if d:
        raise NotADivisorError(f"{x} does not right-divide {w}")
    return Word.positive(n, m)


def right_divides_word(n: int, w: Word, d: Word) -> bool:
    if w.n != d.n:
        raise StrandError(f"words on {w.n} and {d.n} strands")
    den, _ = reverse_pair(as_letters(n, w), as_letters(n, d))
    return not den


def right_divides(w: Letters, d: Letters) -> bool:
    return not reverse_pair(w, d)[0]


def left_divides(n: int, d: Letters, w: Letters) -> bool:
    return right_divides(flip_letters(n, w), flip_letters(n, d))


def left_quotient(n: int, d: Letters, w: Letters) -> Letters:
    """u with d . u == w; requires d to left-divide w."""
    den, num = reverse_pair(flip_letters(n, w), flip_letters(n, d))
    if den:
        raise NotADivisorError("not a left divisor")
    return flip_letters(n, num)


def left_divides_word(n: int, d: Word, w: Word) -> bool:
    if w.n != d.n:
        raise StrandError(f"words on {d.n} and {w.n} strands")
    return left_divides(n, as_letters(n, d), as_letters(n, w))
