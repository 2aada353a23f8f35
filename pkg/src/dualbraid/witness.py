"""
The pair of words showing the rotating normal form is not right automatic.

For k >= 1 take

    w  = (a23 a12 a13)^k a12^(3k)
    w' = (a13 a23 a12)^k a14 a23^(3k)

Both are 4-rotating and w' represents w . a14, so right multiplication by a
single letter relates them. Yet their last 3k letters differ everywhere
(a12 against a23), so their prefixes drift arbitrarily far apart and no
fellow-travelling multiplier automaton can exist. Equalities are decided by
comparing rotating normal forms, since equivalence classes at length 6k are far
beyond the reach of the brute-force oracle.
"""
from __future__ import annotations

from .errors import BraidError
from .sigma import delta_word
from .splitting import braids_equal, is_rotating
from .words import Letter, Word, alphabet

A12, A13, A14, A23 = Letter(1, 2), Letter(1, 3), Letter(1, 4), Letter(2, 3)


def witness_pair(k: int) -> tuple[Word, Word]:
    if k < 1:
        raise BraidError(f"witness index must be positive, got {k}")
    w = (A23, A12, A13) * k + (A12,) * (3 * k)
    w2 = (A13, A23, A12) * k + (A14,) + (A23,) * (3 * k)
    return Word.positive(4, w), Word.positive(4, w2)


def _delta3_power(n: int, e: int) -> Word:
    return Word.positive(n, delta_word(3).letters * e)


def witness_report(k: int) -> dict[str, bool]:
    """Each sub-check by name; the k = 1 identities are only included for k = 1."""
    w, w2 = witness_pair(k)
    tail = 3 * k
    report = {
        "w' == w.a14": braids_equal(4, w2, w + Word.positive(4, [A14])),
        "w rotating": is_rotating(4, w),
        "w' rotating": is_rotating(4, w2),
        "last blocks diverge": (
            set(w.letters[-tail:]) == {A12}
            and set(w2.letters[-tail:]) == {A23}
        ),
        "w == delta3^(3k)": braids_equal(4, w, _delta3_power(4, 3 * k)),
    }
    if k == 1:
        cube = _delta3_power(3, 3)
        head = Word.positive(3, [A23, A12, A13, A12, A12, A12])
        other = Word.positive(3, [A13, A23, A12, A23, A23, A23])
        report["a23 a12 a13 a12^3 == delta3^3"] = braids_equal(3, head, cube)
        report["a13 a23 a12 a23^3 == delta3^3"] = braids_equal(3, other, cube)
        report["delta3^3 central"] = all(
            braids_equal(3, cube + Word.positive(3, [x]), Word.positive(3, [x]) + cube)
            for x in alphabet(3)
        )
    return report


def verify_witness(k: int) -> bool:
    return all(witness_report(k).values())
