from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from dualbraid.words import Letter, SignedLetter, Word, alphabet, parse_word


def W(text: str, n: int) -> Word:
    return parse_word(text, n)


def words(n: int, length: int):
    """Every positive letter tuple of exactly ``length`` letters over BKL_n."""
    return itertools.product(alphabet(n), repeat=length)


def words_upto(n: int, max_length: int):
    for length in range(max_length + 1):
        yield from words(n, length)


def signed_words(n: int, max_length: int = 6):
    letter = st.sampled_from(alphabet(n))
    item = st.builds(SignedLetter, letter, st.sampled_from((1, -1)))
    return st.lists(item, max_size=max_length).map(lambda xs: Word(n, tuple(xs)))


def positive_words(n: int, max_length: int = 6, min_length: int = 0):
    return st.lists(st.sampled_from(alphabet(n)), min_size=min_length, max_size=max_length).map(
        lambda xs: Word.positive(n, xs)
    )


@pytest.fixture
def a():
    """a(p, q) as a Letter."""
    return lambda p, q: Letter(p, q)
