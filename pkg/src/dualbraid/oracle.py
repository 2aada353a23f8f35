"""
Brute-force equivalence of positive words, straight from the defining relations.

Nothing here uses reversing, splittings or automata: two positive words are
equivalent when a chain of single relation rewrites joins them. Relations keep
word length, so each class is finite and a breadth-first closure decides
equivalence. This is the ground truth the other modules are checked against,
and it is only meant for small strand counts and lengths.
"""
from __future__ import annotations

import dataclasses
import itertools
from collections import deque

from .errors import BudgetExceededError, StrandError
from .words import Letter, Word, alphabet, as_letters

DEFAULT_MAX_VISITED = 10**7


def _commute(x: Letter, y: Letter) -> bool:
    """[p,q] and [r,s] disjoint or nested (one strictly inside the other)."""
    (p, q), (r, s) = x, y
    disjoint = q < r or s < p
    nested = (r < p and q < s) or (p < r and s < q)
    return disjoint or nested


def _triple_partners(x: Letter, y: Letter) -> list[tuple[Letter, Letter]]:
    # the three spellings of a_pq a_qr = a_qr a_pr = a_pr a_pq, p < q < r
    forms = []
    (a, b), (c, d) = x, y
    if b == c:                      # a_pq a_qr
        p, q, r = a, b, d
    elif b == d and c < a:          # a_qr a_pr
        p, q, r = c, a, b
    elif a == c and d < b:          # a_pr a_pq
        p, q, r = a, d, b
    else:
        return forms
    spellings = [
        (Letter(p, q), Letter(q, r)),
        (Letter(q, r), Letter(p, r)),
        (Letter(p, r), Letter(p, q)),
    ]
    return [f for f in spellings if f != (x, y)]


def rewrites(letters: tuple[Letter, ...]) -> set[tuple[Letter, ...]]:
    out = set()
    for i in range(len(letters) - 1):
        x, y = letters[i], letters[i + 1]
        if x == y:
            continue
        head, tail = letters[:i], letters[i + 2:]
        if _commute(x, y):
            out.add(head + (y, x) + tail)
        for u, v in _triple_partners(x, y):
            out.add(head + (u, v) + tail)
    return out


def relation_rewrites(n: int, w: Word) -> set[Word]:
    """All words reachable from ``w`` by applying one relation at one position."""
    return {Word.positive(n, r) for r in rewrites(as_letters(n, w))}


def _closure(letters: tuple[Letter, ...], max_visited: int) -> set[tuple[Letter, ...]]:
    seen = {letters}
    queue = deque([letters])
    while queue:
        cur = queue.popleft()
        for nxt in rewrites(cur):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > max_visited:
                    raise BudgetExceededError(
                        f"equivalence class exceeds {max_visited} words"
                    )
                queue.append(nxt)
    return seen


@dataclasses.dataclass(frozen=True)
class EquivClass:
    n: int
    words: frozenset

    @property
    def representative(self) -> Word:
        """Lexicographically least member, letters compared as (p, q) pairs."""
        return min(self.words, key=lambda w: w.letters)

    def __contains__(self, w: Word) -> bool:
        return w in self.words

    def __len__(self) -> int:
        return len(self.words)


def equivalence_class(n: int, w: Word, max_visited: int = DEFAULT_MAX_VISITED) -> EquivClass:
    members = _closure(as_letters(n, w), max_visited)
    return EquivClass(n, frozenset(Word.positive(n, m) for m in members))


def are_equivalent(n: int, u: Word, v: Word, max_visited: int = DEFAULT_MAX_VISITED) -> bool:
    if u.n != v.n:
        raise StrandError(f"words on {u.n} and {v.n} strands")
    a, b = as_letters(n, u), as_letters(n, v)
    if len(a) != len(b):
        return False
    if a == b:
        return True
    return b in _closure(a, max_visited)


def iter_classes(n: int, length: int, max_visited: int = DEFAULT_MAX_VISITED):
    """Yield every class of positive words of the given length as a set of letter tuples.

    Classes come out in the order of their least member.
    """
    letters = alphabet(n)
    total = len(letters) ** length
    if total > max_visited:
        raise BudgetExceededError(
            f"{total} words of length {length} on {n} strands exceed budget {max_visited}"
        )
    seen: set = set()
    for word in itertools.product(letters, repeat=length):
        if word in seen:
            continue
        cls = _closure(word, max_visited)
        seen |= cls
        yield cls


def count_classes(n: int, length: int, max_visited: int = DEFAULT_MAX_VISITED) -> int:
    """Number of distinct braids of BKL_n with a length-``length`` representative."""
    if length < 0:
        raise ValueError("length must be non-negative")
    return sum(1 for _ in iter_classes(n, length, max_visited))
