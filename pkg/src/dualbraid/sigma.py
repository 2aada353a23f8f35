"""
delta-power decompositions and sigma-definite representatives.

Every braid of B_n is delta_n^-t . u with u a positive braid not left-divisible
by delta_n when t > 0. From the phi_n-splitting (beta_b, ..., beta_1) of u one
writes

    delta^(-t+b-1) . w_b . delta^-1 . w_(b-1) . delta^-1 ... delta^-1 . w_1

with w_k the rotating form of beta_k. When t >= b-1 and t > 0 this word is
sigma_(n-1)-negative once translated to Artin generators (each delta^-1 block
carries a single sigma_(n-1)^-1 and the w_k avoid strand n). The leading
exponent is -t+b-1: pushing each inner delta^-1 to the left with
w . delta^-1 = delta^-1 . phi(w) must give back delta^-t . u, and
``collect_deltas`` checks exactly that on the letters.
"""
from __future__ import annotations

import dataclasses
from typing import Iterable

from .errors import BraidError, StrandError
from .reversing import fraction_of, left_divides, left_quotient, reverse_pair
from .splitting import Splitting, _rnf, _splitting, check_splitting
from .words import Letter, SignedLetter, Word, alphabet, delta_letters, phi_letter

Letters = tuple[Letter, ...]


def delta_word(n: int) -> Word:
    if n < 2:
        raise StrandError(f"delta_n needs n >= 2, got {n}")
    return Word.positive(n, delta_letters(n))


def _delta_inverse_items(n: int) -> tuple[SignedLetter, ...]:
    """delta_n^-1 written a(n-1,n)^-1 ... a12^-1."""
    return tuple(SignedLetter(x, -1) for x in reversed(delta_letters(n)))


@dataclasses.dataclass(frozen=True)
class DeltaNormal:
    """The braid delta_n^-t . w, w positive and rotating."""

    n: int
    t: int
    w: Word

    def as_word(self) -> Word:
        return Word(self.n, _delta_inverse_items(self.n) * self.t) + self.w


def reduced_fraction(n: int, w: Word) -> tuple[Letters, Letters]:
    """A left fraction D^-1 . N of ``w`` with no common left divisor."""
    if w.max_strand() > n:
        raise StrandError(f"word uses strand {w.max_strand()} > n = {n}")
    D, N = fraction_of(w.items)
    changed = True
    while changed and D and N:
        changed = False
        for x in alphabet(n):
            if left_divides(n, (x,), D) and left_divides(n, (x,), N):
                D, N = left_quotient(n, (x,), D), left_quotient(n, (x,), N)
                changed = True
                break
    return D, N


def braid_index(n: int, w: Word) -> int:
    """Least m such that the braid lies in B_m (0 for the trivial braid)."""
    D, N = reduced_fraction(n, w)
    return max((x.q for x in D + N), default=0)


def _decompose(n: int, D: Letters, N: Letters) -> tuple[int, Letters]:
    delta = delta_letters(n)
    t = 0
    power: Letters = ()
    while True:
        den, v = reverse_pair(power, D)
        if not den:
            break
        t += 1
        power += delta
    u = v + N
    while t > 0 and u and left_divides(n, delta, u):
        u = left_quotient(n, delta, u)
        t -= 1
    return t, _rnf(n, u)


def delta_decompose(n: int, w: Word) -> DeltaNormal:
    if w.max_strand() > n:
        raise StrandError(f"word uses strand {w.max_strand()} > n = {n}")
    D, N = fraction_of(w.items)
    t, u = _decompose(n, D, N)
    return DeltaNormal(n, t, Word.positive(n, u))


def sdn_word(n: int, t: int, s: Splitting) -> Word:
    """The word delta^(-t+b-1) w_b delta^-1 ... delta^-1 w_1 on n strands."""
    if s.n != n:
        raise StrandError(f"splitting on {s.n} strands used with n = {n}")
    b = s.b
    if t < b - 1:
        raise BraidError(f"t = {t} < b - 1 = {b - 1}: the braid is not sigma_{n - 1}-negative")
    dinv = _delta_inverse_items(n)
    items = list(dinv * (t - b + 1))
    for i, e in enumerate(s.entries):
        if i:
            items += dinv
        items += [SignedLetter(x, 1) for x in e.letters]
    return Word(n, tuple(items))


def _segments(n: int, w: Word) -> tuple[int, list[Letters]] | None:
    """Cut ``w`` into delta^-e and positive segments separated by delta^-1 blocks."""
    dinv = _delta_inverse_items(n)
    items = w.items
    i, lead = 0, 0
    while items[i : i + len(dinv)] == dinv:
        i += len(dinv)
        lead += 1
    segs: list[list[Letter]] = [[]]
    while i < len(items):
        if items[i : i + len(dinv)] == dinv:
            segs.append([])
            i += len(dinv)
        elif items[i].sign > 0:
            segs[-1].append(items[i].letter)
            i += 1
        else:
            return None
    if lead and segs == [[]]:
        return lead, []
    return lead, [tuple(s) for s in segs]


def collect_deltas(n: int, w: Word) -> Word:
    """Push every delta^-1 block to the front using x . delta^-1 -> delta^-1 . phi(x).

    The rewriting is done one letter at a time on the token sequence; it fails
    if ``w`` has an inverse letter outside a delta^-1 block.
    """
    parsed = _segments(n, w)
    if parsed is None:
        raise BraidError("word is not made of positive letters and delta^-1 blocks")
    lead, segs = parsed
    tokens: list = []
    for i, seg in enumerate(segs):
        if i:
            tokens.append(None)  # a delta^-1 block
        tokens.extend(seg)
    moved = True
    while moved:
        moved = False
        for i in range(len(tokens) - 1):
            if tokens[i] is not None and tokens[i + 1] is None:
                tokens[i], tokens[i + 1] = None, phi_letter(n, 1, tokens[i])
                moved = True
    blocks = lead + tokens.count(None)
    items = _delta_inverse_items(n) * blocks
    items += tuple(SignedLetter(x, 1) for x in tokens if x is not None)
    return Word(n, items)


def is_sdn(n: int, w: Word) -> bool:
    """Membership in SDN_n: the shape above, entries a genuine splitting in rotating
    form, t = e + b - 1 > 0 and delta_n not left-dividing the positive part."""
    if n < 3 or w.max_strand() > n:
        return False
    parsed = _segments(n, w)
    if parsed is None:
        return False
    e, segs = parsed
    if not segs:
        return e > 0
    if any(x.q >= n for seg in segs for x in seg):
        return False
    if any(_rnf(n - 1, seg) != seg for seg in segs):
        return False
    split = Splitting(n, tuple(Word.positive(n - 1, seg) for seg in segs))
    if check_splitting(split):
        return False
    u = split.reassemble().letters
    if _splitting(n, u) != tuple(segs):
        return False
    t = e + split.b - 1
    return t > 0 and not left_divides(n, delta_letters(n), u)


# --- Artin generators -----------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class SigmaWord:
    """Signed Artin generators, +i for sigma_i and -i for its inverse."""

    items: tuple[int, ...] = ()

    def __post_init__(self):
        if any(i == 0 for i in self.items):
            raise ValueError("Artin generator indices start at 1")

    def __str__(self) -> str:
        if not self.items:
            return "e"
        return " ".join(f"σ{i}" if i > 0 else f"σ{-i}^-1" for i in self.items)

    def __len__(self) -> int:
        return len(self.items)


def _band_to_artin(x: Letter) -> list[int]:
    left = list(range(x.p, x.q - 1))
    return left + [x.q - 1] + [-i for i in reversed(left)]


def to_artin(n: int, w: Word) -> SigmaWord:
    if w.max_strand() > n:
        raise StrandError(f"word uses strand {w.max_strand()} > n = {n}")
    out: list[int] = []
    for s in w.items:
        block = _band_to_artin(s.letter)
        out += block if s.sign > 0 else [-i for i in reversed(block)]
    return SigmaWord(tuple(out))


def sigma_scan(sw: SigmaWord | Iterable[int]) -> tuple[int, str]:
    items = sw.items if isinstance(sw, SigmaWord) else tuple(sw)
    if not items:
        return 0, "trivial"
    top = max(abs(i) for i in items)
    signs = {i > 0 for i in items if abs(i) == top}
    if len(signs) == 2:
        return top, "mixed"
    return top, "positive" if True in signs else "negative"


# --- sigma-definite representatives ----------------------------------------------

def _negative_rep(k: int, D: Letters, N: Letters) -> Word | None:
    """The SDN_k word of D^-1 N, or None if that braid is not sigma_(k-1)-negative."""
    t, u = _decompose(k, D, N)
    if not u:
        return Word(k, _delta_inverse_items(k) * t) if t else None
    entries = _splitting(k, u)
    if t == 0 or t < len(entries) - 1:
        return None
    split = Splitting(k, tuple(Word.positive(k - 1, e) for e in entries))
    return sdn_word(k, t, split)


def sigma_definite_rep(n: int, w: Word) -> tuple[int, Word]:
    """(index k, sigma-definite word) for the braid of ``w``; (0, e) if trivial.

    For k >= 3 the word is the SDN_k representative when the braid is
    sigma_(k-1)-negative and the inverse of the SDN_k representative of the
    inverse braid otherwise.
    """
    D, N = reduced_fraction(n, w)
    k = max((x.q for x in D + N), default=0)
    if k == 0:
        return 0, Word(n)
    if k == 2:
        sign = 1 if N else -1
        return 2, Word(n, (SignedLetter(Letter(1, 2), sign),) * len(N or D))
    rep = _negative_rep(k, D, N)
    if rep is None:
        rep = _negative_rep(k, N, D)
        if rep is None:
            raise BraidError("braid is neither sigma-negative nor sigma-positive; reversing is inconsistent")
        rep = rep.inverse()
    return k, Word(n, rep.items)
