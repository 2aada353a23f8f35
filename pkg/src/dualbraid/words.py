"""
Letters and words over the band generators a(p,q) of the dual braid monoid.

A letter a(p,q), 1 <= p < q <= n, is stored as the pair ``Letter(p, q)``; a word
carries its strand count ``n`` together with a tuple of signed letters. The
text form used everywhere (CLI, tests, exports) is::

    "1.2 2.3 1.3!"      # a12 . a23 . a13^-1

with the empty string standing for the empty word.

Besides parsing and printing, this module holds the three letter-level maps the
rest of the package builds on:

- ``phi``: conjugation by the Garside element delta_n, which rotates the chord
  {p, q} by one position on the n-cycle;
- ``mirror``: reversal of a word (automata read mirrored words);
- ``flip``: the anti-automorphism a(p,q) -> a(n+1-q, n+1-p) composed with
  reversal, which turns left division questions into right division ones.
"""
from __future__ import annotations

import dataclasses
import re
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import NotPositiveError, StrandError, WordSyntaxError


class Letter(NamedTuple):
    p: int
    q: int

    def __str__(self) -> str:
        return f"{self.p}.{self.q}"

    def touches(self, strand: int) -> bool:
        return self.p == strand or self.q == strand


class SignedLetter(NamedTuple):
    letter: Letter
    sign: int = 1

    def __str__(self) -> str:
        return str(self.letter) + ("" if self.sign > 0 else "!")

    def inverse(self) -> SignedLetter:
        return SignedLetter(self.letter, -self.sign)


def check_letter(x: Letter, n: int) -> None:
    if not (1 <= x.p < x.q <= n):
        raise StrandError(f"letter {x.p}.{x.q} is not a generator of BKL_{n}")


@dataclasses.dataclass(frozen=True)
class Word:
    """A finite sequence of signed band generators on ``n`` strands."""

    n: int
    items: tuple[SignedLetter, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise StrandError(f"strand count must be at least 2, got {self.n}")
        items = tuple(
            s if isinstance(s, SignedLetter) else SignedLetter(Letter(*s[0]), s[1])
            for s in self.items
        )
        for s in items:
            check_letter(s.letter, self.n)
            if s.sign not in (1, -1):
                raise WordSyntaxError(f"bad sign {s.sign!r}")
        object.__setattr__(self, "items", items)

    @classmethod
    def positive(cls, n: int, letters: Iterable[Sequence[int]]) -> Word:
        return cls(n, tuple(SignedLetter(Letter(*x), 1) for x in letters))

    @classmethod
    def parse(cls, text: str, n: int) -> Word:
        return parse_word(text, n)

    def __len__(self) -> int:
        return len(self.items)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({self.n}, {format_word(self)!r})"

    def __add__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        if other.n != self.n:
            raise StrandError(f"cannot concatenate words on {self.n} and {other.n} strands")
        return Word(self.n, self.items + other.items)

    @property
    def is_positive(self) -> bool:
        return all(s.sign > 0 for s in self.items)

    @property
    def letters(self) -> tuple[Letter, ...]:
        """The underlying letters of a positive word."""
        if not self.is_positive:
            raise NotPositiveError(f"word {format_word(self)!r} is not positive")
        return tuple(s.letter for s in self.items)

    def inverse(self) -> Word:
        return Word(self.n, tuple(s.inverse() for s in reversed(self.items)))

    def embed(self, n: int) -> Word:
        """The same word seen on ``n`` strands (``n`` may only grow or stay)."""
        if n < self.max_strand():
            raise StrandError(f"word uses strand {self.max_strand()}, cannot live on {n}")
        return Word(n, self.items)

    def max_strand(self) -> int:
        return max((s.letter.q for s in self.items), default=0)


def alphabet(n: int) -> tuple[Letter, ...]:
    """All letters a(p,q) of BKL_n in the canonical order (p first, then q)."""
    return _alphabet(n)


@lru_cache(maxsize=None)
def _alphabet(n: int) -> tuple[Letter, ...]:
    return tuple(Letter(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1))


_TOKEN = re.compile(r"^(\d+)\.(\d+)(!?)$")


def parse_word(text: str, n: int) -> Word:
    items = []
    for token in text.split():
        if token == "e":  # the empty word, as printed by the CLI
            continue
        m = _TOKEN.match(token)
        if m is None:
            raise WordSyntaxError(f"malformed letter token {token!r}")
        p, q = int(m.group(1)), int(m.group(2))
        if not p < q:
            raise StrandError(f"letter {token!r} needs p < q")
        if q > n:
            raise StrandError(f"letter {token!r} uses strand {q} > n = {n}")
        items.append(SignedLetter(Letter(p, q), -1 if m.group(3) else 1))
    return Word(n, tuple(items))


def format_word(w: Word | Iterable) -> str:
    """Inverse of :func:`parse_word`; also accepts a bare sequence of letters."""
    items = w.items if isinstance(w, Word) else w
    return " ".join(str(s) for s in items)


def as_letters(n: int, w: Word) -> tuple[Letter, ...]:
    """Validate ``w`` as a positive word usable on ``n`` strands."""
    if w.max_strand() > n:
        raise StrandError(f"word uses strand {w.max_strand()} > n = {n}")
    return w.letters


def phi_letter(n: int, k: int, x: Letter) -> Letter:
    """Image of ``x`` under phi_n^k: rotate the chord {p, q} by k on the n-cycle.

    For k = 1 this is a(p+1, q+1) when q < n and a(1, p+1) when q = n; negative
    k rotates the other way, which is the explicit inverse map.
    """
    k %= n
    if k == 0:
        return x
    p = (x.p - 1 + k) % n + 1
    q = (x.q - 1 + k) % n + 1
    return Letter(p, q) if p < q else Letter(q, p)


def phi_letters(n: int, k: int, letters: Iterable[Letter]) -> tuple[Letter, ...]:
    k %= n
    if k == 0:
        return tuple(letters)
    return tuple(phi_letter(n, k, x) for x in letters)


def phi(n: int, k: int, w: Word) -> Word:
    if w.max_strand() > n:
        raise StrandError(f"word uses strand {w.max_strand()} > n = {n}")
    return Word(n, tuple(SignedLetter(phi_letter(n, k, s.letter), s.sign) for s in w.items))


def mirror(w: Word) -> Word:
    return Word(w.n, w.items[::-1])


def flip_letter(n: int, x: Letter) -> Letter:
    return Letter(n + 1 - x.q, n + 1 - x.p)


def flip_letters(n: int, letters: Sequence[Letter]) -> tuple[Letter, ...]:
    return tuple(flip_letter(n, x) for x in reversed(letters))


def flip(n: int, w: Word) -> Word:
    letters = as_letters(n, w)
    return Word.positive(n, flip_letters(n, letters))


def delta_letters(n: int) -> tuple[Letter, ...]:
    """The Garside element delta_n = a12 a23 ... a(n-1,n) as a letter tuple."""
    return tuple(Letter(i, i + 1) for i in range(1, n))
