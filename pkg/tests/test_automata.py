import itertools

import pytest

from conftest import W
from dualbraid.automata import (
    INIT,
    Dfa,
    PartialAutomaton,
    StateLabel,
    accepts,
    close,
    count_accepted,
    export,
    export_dot,
    import_text,
    language,
    minimize,
    prune,
)
from dualbraid.construction import build_A, build_A2, build_P0, build_P_star, build_P_star_base
from dualbraid.errors import AutomatonError
from dualbraid.words import Letter, Word, alphabet, mirror

A12, A13, A23 = Letter(1, 2), Letter(1, 3), Letter(2, 3)


def figure_P3():
    """The three-state partial automaton for mirrored 3-rotating words ending in a(.,3)."""
    delta = {
        (1, A23): 1, (1, A13): 2,
        (2, A13): 2, (2, A12): 3,
        (3, A12): 3, (3, A23): 1,
    }
    return PartialAutomaton(3, alphabet(3), (1, 2, 3), {A23: 1, A13: 2}, delta)


def figure_A3():
    delta = {
        (0, A12): 0, (0, A23): 1, (0, A13): 2,
        (1, A23): 1, (1, A13): 2,
        (2, A13): 2, (2, A12): 3,
        (3, A12): 3, (3, A23): 1,
    }
    return Dfa(3, alphabet(3), (0, 1, 2, 3), 0, delta)


def all_words(n, max_length):
    for length in range(max_length + 1):
        yield from itertools.product(alphabet(n), repeat=length)


def same_language(M1, M2, n, max_length):
    return all(accepts(M1, w) == accepts(M2, w) for w in all_words(n, max_length))


def test_state_label_text_roundtrip():
    label = StateLabel(((1, 0b11), (0, 0b1), (2, 0)), "P2")
    assert str(label) == "1{2.5,3.5}/0{2.4}/2{}/P2"
    assert StateLabel.parse(str(label)) == label
    assert str(INIT) == "init"
    assert label.memory(0) == {Letter(2, 5), Letter(3, 5)}
    with pytest.raises(AutomatonError):
        StateLabel.parse("x{}/P2")


def test_close_of_figure_P3():
    closed = close(figure_P3(), initial=0)
    assert len(closed) == 4
    # four states like A3; A3 only adds the a12 loop on the start state
    looped = Dfa(3, closed.alphabet, closed.states, 0, {**closed.delta, (0, A12): 0})
    assert same_language(looped, figure_A3(), 3, 8)
    assert not accepts(closed, [A12])
    for w in all_words(3, 6):
        assert accepts(closed, w) == (not w or (accepts(figure_A3(), w) and w[0].q == 3))


def test_close_with_empty_initial_map_accepts_only_the_empty_word():
    P = PartialAutomaton(3, alphabet(3), ("s",), {}, {("s", A12): "s"})
    M = close(P)
    assert accepts(M, ())
    assert language(M, 4) == {()}


def test_close_of_base_is_A2():
    closed = close(build_P_star_base())
    assert same_language(closed, build_A2(), 2, 6)
    assert len(minimize(closed)) == 1


def test_close_refuses_a_clashing_state():
    P = PartialAutomaton(2, (A12,), (INIT,), {}, {})
    with pytest.raises(AutomatonError):
        close(P)


def test_accepts_examples():
    A2 = build_A2()
    assert accepts(A2, W("1.2 1.2", 2))
    assert accepts(build_A(3), mirror(W("1.2 1.3 1.2 1.2", 3)))
    for M in (A2, build_A(3), figure_A3()):
        assert accepts(M, ())


def test_accepts_rejects_foreign_letters():
    with pytest.raises(AutomatonError):
        accepts(build_A2(), [A13])
    with pytest.raises(AutomatonError):
        accepts(build_A(3), W("1.4", 4))


def test_dead_state_is_absorbing():
    M = figure_A3()
    # a12 then a13 goes nowhere from state 1 onward
    assert M.run([A23, A12]) is None
    assert M.step(None, A12) is None
    assert not accepts(M, [A23, A12, A13])


def test_dfa_validation():
    with pytest.raises(AutomatonError):
        Dfa(3, alphabet(3), (0,), 1, {})
    with pytest.raises(AutomatonError):
        Dfa(3, alphabet(3), (0,), 0, {(0, A12): 5})
    with pytest.raises(AutomatonError):
        Dfa(2, (A12,), (0,), 0, {(0, A13): 0})


def test_prune_examples():
    closed = close(build_P0(4, full=True))
    pruned = prune(closed)
    assert len(pruned) - 1 == 4
    assert len(closed) > len(pruned)
    assert same_language(closed, pruned, 3, 6)
    A3 = build_A(3)
    assert prune(A3) == A3


def test_minimize_examples():
    A2 = build_A2()
    assert len(minimize(A2)) == 1
    for M in (build_A(3), close(build_P_star(3)), figure_A3()):
        m = minimize(M)
        assert same_language(M, m, 3, 6)
        assert minimize(m) == m


def test_minimize_merges_equivalent_states():
    delta = {("a", A12): "b", ("b", A12): "a"}
    M = Dfa(2, (A12,), ("a", "b"), "a", delta)
    m = minimize(M)
    assert len(m) == 1 and same_language(M, m, 2, 6)


def test_minimize_respects_a_genuine_accepting_set():
    # even-length words over a12
    delta = {("e", A12): "o", ("o", A12): "e"}
    M = Dfa(2, (A12,), ("e", "o"), "e", delta, accepting={"e"})
    m = minimize(M)
    assert len(m) == 2
    assert [accepts(m, [A12] * k) for k in range(4)] == [True, False, True, False]


def test_minimize_drops_dead_ends():
    delta = {("a", A12): "sink", ("sink", A12): "sink"}
    M = Dfa(2, (A12,), ("a", "sink"), "a", delta, accepting={"a"})
    assert len(minimize(M)) == 1
    assert language(minimize(M), 3) == {()}


def test_count_accepted_examples():
    A3 = build_A(3)
    assert count_accepted(A3, 0) == 1
    assert count_accepted(A3, 1) == 3
    assert count_accepted(A3, 2) == 7
    assert [count_accepted(build_A2(), k) for k in range(11)] == [1] * 11
    with pytest.raises(ValueError):
        count_accepted(A3, -1)


@pytest.mark.parametrize("n", [3, 4])
def test_count_accepted_matches_enumeration(n):
    M = build_A(n)
    for length in range(5):
        brute = sum(accepts(M, w) for w in itertools.product(alphabet(n), repeat=length))
        assert count_accepted(M, length) == brute


def test_export_dot():
    dot = export(build_A2(), "dot").decode()
    assert dot.count('[label="1.2"]') == 1
    assert "__start [shape=point];" in dot and "__start -> 0;" in dot
    assert export_dot(build_A(3)).count("->") == 1 + 9


def test_export_text_of_A3():
    text = export(build_A(3), "text").decode()
    lines = text.splitlines()
    assert lines[:2] == ["n=3", "alphabet=1.2,1.3,2.3"]
    assert sum(line.startswith("state ") for line in lines) == 4
    assert lines[2] == "state 0 label=A2"
    assert "0 --1.2--> 0" in lines


@pytest.mark.parametrize("n", [2, 3, 4])
def test_export_import_roundtrip(n):
    for M in (build_A(n), minimize(build_A(n))):
        assert import_text(export(M, "text")) == M
    closed = close(build_P_star(n))
    assert import_text(export(closed, "text")) == closed


def test_import_keeps_plain_labels():
    M = figure_A3()
    again = import_text(export(M, "text"))
    assert same_language(M, again, 3, 5)
    assert export(again, "text") == export(M, "text")


def test_export_errors():
    with pytest.raises(AutomatonError):
        export(build_A2(), "svg")
    with pytest.raises(AutomatonError):
        import_text("hello")
    with pytest.raises(AutomatonError):
        import_text("n=2\nalphabet=1.2\nstate 0 label=A2\nbogus line\n")


def test_language_of_A2():
    assert language(build_A2(), 3) == {(), (A12,), (A12, A12), (A12, A12, A12)}
    assert Word.positive(2, [A12]).letters in language(build_A2(), 1)
