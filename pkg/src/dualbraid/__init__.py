"""Rotating normal form, reversing and automata for the dual braid monoids BKL_n."""
from .automata import (
    Dfa,
    PartialAutomaton,
    StateLabel,
    accepts,
    close,
    count_accepted,
    export,
    import_text,
    minimize,
    prune,
)
from .construction import build_A, build_A2, build_P0, build_P_star, build_Pk
from .errors import BraidError
from .oracle import EquivClass, are_equivalent, count_classes, equivalence_class, relation_rewrites
from .reversing import (
    Fraction,
    complement,
    left_divides_word,
    left_reverse,
    right_divides_letter,
    right_divides_word,
    right_quotient,
)
from .sigma import (
    DeltaNormal,
    SigmaWord,
    delta_decompose,
    delta_word,
    sdn_word,
    sigma_definite_rep,
    sigma_scan,
    to_artin,
)
from .splitting import (
    Splitting,
    barrier_set,
    bkl_tail,
    braids_equal,
    is_ladder,
    is_rotating,
    phi_splitting,
    rotating_normal_form,
)
from .witness import verify_witness, witness_pair
from .words import Letter, SignedLetter, Word, flip, format_word, mirror, parse_word, phi

__version__ = "0.1.0"
