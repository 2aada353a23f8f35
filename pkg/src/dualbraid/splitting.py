"""
phi_n-splittings and the rotating normal form.

For n >= 3 every non-trivial braid of BKL_n is cut into a sequence
(beta_b, ..., beta_1) of braids of BKL_{n-1}: beta_1 is the maximal right divisor
lying in BKL_{n-1} (the tail), and the rest is rotated back by phi_n^-1 and
split again. Normalising each entry recursively and rotating it back into place
gives the rotating normal form.

``is_rotating`` decides the same language without any monoid computation: it
cuts a word into maximal suffix blocks and checks the block conditions
(recursive rotating blocks, last letters of type a(., n-1), barrier presence).
The two routes are kept independent on purpose; the tests compare them.
"""
from __future__ import annotations

import dataclasses
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import BraidError, StrandError
from .reversing import reverse_pair
from .words import Letter, Word, alphabet, as_letters, check_letter, phi_letters

Letters = tuple[Letter, ...]


def _need(n: int, minimum: int) -> None:
    if n < minimum:
        raise StrandError(f"operation needs n >= {minimum}, got {n}")


# --- tails and splittings ---------------------------------------------------

def tail_is_trivial(n: int, letters: Letters) -> bool:
    """No letter of BKL_{n-1} right-divides the braid."""
    return not any(not reverse_pair(letters, (x,))[0] for x in alphabet(n - 1))


@lru_cache(maxsize=1 << 18)
def _tail(n: int, letters: Letters) -> tuple[Letters, Letters]:
    # strip the least right-dividing letter of BKL_{n-1} until none is left
    stripped = []
    cur = letters
    small = alphabet(n - 1)
    while cur:
        for x in small:
            d, rest = reverse_pair(cur, (x,))
            if not d:
                stripped.append(x)
                cur = rest
                break
        else:
            break
    return _rnf(n - 1, tuple(reversed(stripped))), cur


@lru_cache(maxsize=1 << 18)
def _splitting(n: int, letters: Letters) -> tuple[Letters, ...]:
    entries = []
    gamma = letters
    empty_run = 0
    while gamma:
        tail, rest = _tail(n, gamma)
        entries.append(tail)
        empty_run = 0 if tail else empty_run + 1
        if empty_run > 2:
            raise BraidError("splitting failed to progress; reversing is inconsistent")
        gamma = phi_letters(n, -1, rest)
    return tuple(reversed(entries))


@lru_cache(maxsize=1 << 18)
def _rnf(n: int, letters: Letters) -> Letters:
    if n == 2 or not letters:
        return letters
    entries = _splitting(n, letters)
    b = len(entries)
    out: Letters = ()
    for i, entry in enumerate(entries):
        out += phi_letters(n, b - 1 - i, entry)
    return out


def bkl_tail(n: int, w: Word) -> Word:
    """The maximal right divisor of ``w`` lying in BKL_{n-1}, in rotating form."""
    _need(n, 3)
    tail, _ = _tail(n, as_letters(n, w))
    return Word.positive(n - 1, tail)


@dataclasses.dataclass(frozen=True)
class Splitting:
    """(beta_b, ..., beta_1), stored left to right as in the written product."""

    n: int
    entries: tuple[Word, ...]

    @property
    def b(self) -> int:
        return len(self.entries)

    def entry(self, k: int) -> Word:
        """beta_k, 1-based from the right."""
        return self.entries[self.b - k]

    def reassemble(self) -> Word:
        out: Letters = ()
        for i, e in enumerate(self.entries):
            out += phi_letters(self.n, self.b - 1 - i, e.letters)
        return Word.positive(self.n, out)

    def __str__(self) -> str:
        return " | ".join(str(e) if len(e) else "e" for e in self.entries)


def phi_splitting(n: int, w: Word) -> Splitting:
    _need(n, 3)
    letters = as_letters(n, w)
    if not letters:
        raise BraidError("the trivial braid has no phi-splitting")
    entries = _splitting(n, letters)
    return Splitting(n, tuple(Word.positive(n - 1, e) for e in entries))


def rotating_normal_form(n: int, w: Word) -> Word:
    """The unique n-rotating word representing the same braid as ``w``."""
    _need(n, 2)
    return Word.positive(n, _rnf(n, as_letters(n, w)))


def braids_equal(n: int, u: Word, v: Word) -> bool:
    if u.n != v.n:
        raise StrandError(f"words on {u.n} and {v.n} strands")
    return _rnf(n, as_letters(n, u)) == _rnf(n, as_letters(n, v))


# --- barriers ---------------------------------------------------------------

def barrier_set(n: int, x: Letter) -> frozenset[Letter]:
    """Letters a(p,n) for which ``x`` is a barrier, i.e. r < p < s for x = a(r,s)."""
    check_letter(x, n - 1)
    return frozenset(Letter(p, n) for p in range(x.p + 1, x.q))


def contains_barrier(letters: Iterable[Letter], p: int) -> bool:
    return any(x.p < p < x.q for x in letters)


# --- syntactic recognition ----------------------------------------------------

def rotating_blocks(n: int, letters: Sequence[Letter]) -> list[Letters]:
    """Cut a word into (w_1, w_2, ...), w_k rotated back onto n-1 strands.

    Block k is the maximal suffix of what is left whose letters avoid the
    strand phi_n^{k-1} moves strand n to.
    """
    blocks = []
    i = len(letters)
    k = 1
    while i > 0:
        avoid = (k - 1) % n or n
        j = i
        while j > 0 and not letters[j - 1].touches(avoid):
            j -= 1
        blocks.append(phi_letters(n, -(k - 1), letters[j:i]))
        i = j
        k += 1
    return blocks


@lru_cache(maxsize=1 << 18)
def _is_rotating(n: int, letters: Letters) -> bool:
    if n == 2 or not letters:
        return True
    blocks = rotating_blocks(n, letters)
    b = len(blocks)
    for k in range(2, b + 1):
        w = blocks[k - 1]
        if not w:
            if k >= 3 or b == 2:
                return False
            continue
        if w[-1].q != n - 1:
            return False
    for k in range(3, b + 1):
        p = blocks[k - 1][-1].p + 1
        if p != n - 1 and not contains_barrier(blocks[k - 2], p):
            return False
    return all(_is_rotating(n - 1, w) for w in blocks)


def is_rotating(n: int, w: Word) -> bool:
    _need(n, 2)
    return _is_rotating(n, as_letters(n, w))


_CYCLE3 = (Letter(1, 2), Letter(2, 3), Letter(1, 3))


def template3_exponents(letters: Sequence[Letter]) -> list[int]:
    """Exponents (e_1, e_2, ...) writing a 3-strand word as ... a13^e3 a23^e2 a12^e1.

    Blocks cycle through a12, a23, a13 from the right; the shortest such
    writing is returned, so the last exponent is non-zero for non-empty words.
    """
    exps = []
    i = len(letters)
    k = 0
    while i > 0:
        x = _CYCLE3[k % 3]
        e = 0
        while i > 0 and letters[i - 1] == x:
            e += 1
            i -= 1
        exps.append(e)
        k += 1
    return exps


def matches_template3(letters: Sequence[Letter]) -> bool:
    """The 3-strand rotating criterion: every exponent e_k with k >= 3 is non-zero."""
    if any(x.q > 3 for x in letters):
        raise StrandError("template applies to 3-strand words only")
    return all(e for e in template3_exponents(letters)[2:])


# --- ladders ----------------------------------------------------------------

def is_ladder(n: int, w: Word, p: int, lent: Letter | None = None) -> bool:
    """Is the (n-1)-rotating word ``w`` an a(p,n)-ladder lent on ``lent``?

    ``lent`` defaults to the last letter of ``w``. The scan is greedy: the first
    a(j,n)-barrier met at height j is forced to be the next rung, and the word
    must reach height n-1 and end with the lent letter.
    """
    _need(n, 3)
    letters = as_letters(n - 1, w)
    if not letters:
        raise BraidError("a ladder needs a non-empty word")
    if not 2 <= p <= n - 1:
        raise BraidError(f"ladder height {p} outside [2, {n - 1}]")
    if not _is_rotating(n - 1, letters):
        raise BraidError(f"{w} is not {n - 1}-rotating")
    lent = letters[-1] if lent is None else Letter(*lent)
    if letters[-1] != lent or lent.q != n - 1:
        return False
    height = p
    for x in letters:
        if height == n - 1:
            break
        if x.p < height < x.q:
            height = x.q
    return height == n - 1


# --- splitting characterisation ------------------------------------------------

def check_splitting(split: Splitting) -> list[str]:
    """Violations of the splitting characterisation; empty for a genuine splitting.

    Checked: entries beta_k non-trivial for k >= 3 and k = b; the BKL_{n-1}-tail
    of phi_n(beta_k) trivial for k >= 2; non-empty beta_k (k >= 2) ending with a
    letter a(., n-1); and for k >= 3, beta_{k-1} containing a
    phi_n(last beta_k)-barrier unless that last letter is a(n-2, n-1).
    """
    n, b = split.n, split.b
    problems = []
    for k in range(1, b + 1):
        beta = split.entry(k).letters
        if not beta and (k >= 3 or k == b):
            problems.append(f"beta_{k} is trivial")
        if k >= 2:
            if not tail_is_trivial(n, phi_letters(n, 1, beta)):
                problems.append(f"tail of phi(beta_{k}) is not trivial")
            if beta and beta[-1].q != n - 1:
                problems.append(f"beta_{k} ends with {beta[-1]}, not a letter a(.,{n - 1})")
        if k >= 3 and beta:
            last = beta[-1]
            if last != Letter(n - 2, n - 1):
                p = last.p + 1
                if not contains_barrier(split.entry(k - 1).letters, p):
                    problems.append(f"beta_{k - 1} lacks an a({p},{n})-barrier")
    return problems


def clear_caches() -> None:
    for f in (_tail, _splitting, _rnf, _is_rotating):
        f.cache_clear()
