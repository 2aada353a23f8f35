"""
Deterministic automata over band-generator alphabets.

Machines are partial: a missing transition goes to the implicit dead state,
which is the only rejecting state under the convention used throughout the
package. An accepting set is still stored so that minimisation and pruning work
for arbitrary machines.

States are hashable labels. The constructions in :mod:`dualbraid.construction`
use :class:`StateLabel`, whose text form is stable and is what the exporters
print; any other hashable with a sensible ``str`` also works.
"""
from __future__ import annotations

import dataclasses
import re
from collections import deque
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import AutomatonError
from .words import Letter, Word

State = Hashable
DEAD_LABEL = "⊗"


@dataclasses.dataclass(frozen=True, order=True)
class StateLabel:
    """A construction path: (component, barrier mask) pairs, outermost first.

    ``base`` names the ground state the recursion ends on: ``"P2"`` (the
    one-state P*_2), ``"A2"`` (the one-state A_2) or ``"init"`` (a closure's
    fresh initial state). The pair at position d lives at strand level
    len(path) + 2 - d; bit i of its mask stands for the letter a(i+2, level).
    """

    path: tuple[tuple[int, int], ...] = ()
    base: str = "P2"

    def level(self, depth: int) -> int:
        return len(self.path) + 2 - depth

    def memory(self, depth: int = 0) -> frozenset[Letter]:
        level = self.level(depth)
        mask = self.path[depth][1]
        return frozenset(Letter(i + 2, level) for i in range(level) if mask >> i & 1)

    def __str__(self) -> str:
        parts = []
        for d, (k, _) in enumerate(self.path):
            tokens = ",".join(str(x) for x in sorted(self.memory(d)))
            parts.append(f"{k}{{{tokens}}}")
        parts.append(self.base)
        return "/".join(parts)

    @classmethod
    def parse(cls, text: str) -> StateLabel:
        *entries, base = text.split("/")
        path = []
        for entry in entries:
            m = _ENTRY.match(entry)
            if m is None:
                raise AutomatonError(f"malformed state label {text!r}")
            mask = 0
            for tok in filter(None, m.group(2).split(",")):
                p, _ = tok.split(".")
                mask |= 1 << (int(p) - 2)
            path.append((int(m.group(1)), mask))
        return cls(tuple(path), base)


_ENTRY = re.compile(r"^(\d+)\{([0-9.,]*)\}$")


def _order(states: Iterable[State], initial: State) -> tuple[State, ...]:
    rest = sorted((s for s in states if s != initial), key=str)
    return (initial, *rest)


@dataclasses.dataclass(frozen=True, eq=False)
class Dfa:
    """A deterministic machine with an implicit dead state.

    ``states`` is kept in export order: the initial state first, the others
    sorted by label text. ``accepting`` defaults to every listed state.
    """

    n: int
    alphabet: tuple[Letter, ...]
    states: tuple[State, ...]
    initial: State
    delta: Mapping[tuple[State, Letter], State]
    accepting: frozenset = None

    def __post_init__(self):
        states = set(self.states)
        if self.initial not in states:
            raise AutomatonError("initial state is not a state of the machine")
        for (s, x), t in self.delta.items():
            if s not in states or t not in states:
                raise AutomatonError(f"transition {s} --{x}--> {t} leaves the state set")
            if x not in self.alphabet:
                raise AutomatonError(f"transition on {x} outside the alphabet")
        object.__setattr__(self, "states", _order(states, self.initial))
        object.__setattr__(self, "alphabet", tuple(sorted(self.alphabet)))
        acc = frozenset(states) if self.accepting is None else frozenset(self.accepting)
        object.__setattr__(self, "accepting", acc)
        object.__setattr__(self, "delta", dict(self.delta))

    def step(self, s: State | None, x: Letter) -> State | None:
        """None is the dead state."""
        if s is None:
            return None
        return self.delta.get((s, x))

    def run(self, letters: Iterable[Letter]) -> State | None:
        s = self.initial
        allowed = set(self.alphabet)
        for x in letters:
            if x not in allowed:
                raise AutomatonError(f"letter {x} is not in the machine's alphabet")
            s = self.step(s, x)
        return s

    def __len__(self) -> int:
        return len(self.states)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dfa):
            return NotImplemented
        return (
            self.n == other.n
            and self.alphabet == other.alphabet
            and self.states == other.states
            and self.initial == other.initial
            and self.delta == other.delta
            and self.accepting == other.accepting
        )


@dataclasses.dataclass(frozen=True, eq=False)
class PartialAutomaton:
    """A machine with an initial map from letters to states instead of a start state."""

    n: int
    alphabet: tuple[Letter, ...]
    states: tuple[State, ...]
    initial_map: Mapping[Letter, State]
    delta: Mapping[tuple[State, Letter], State]

    def __len__(self) -> int:
        return len(self.states)


INIT = StateLabel((), "init")


def close(P: PartialAutomaton, initial: State = INIT) -> Dfa:
    """Add a fresh accepting start state o with o --x--> I(x)."""
    if initial in set(P.states):
        raise AutomatonError(f"closure state {initial} already used")
    delta = dict(P.delta)
    for x, t in P.initial_map.items():
        delta[(initial, x)] = t
    return Dfa(P.n, P.alphabet, (initial, *P.states), initial, delta)


def _word_letters(M: Dfa, w) -> tuple[Letter, ...]:
    if isinstance(w, Word):
        if w.max_strand() > M.n:
            raise AutomatonError(f"word uses strand {w.max_strand()} > n = {M.n}")
        return w.letters
    return tuple(Letter(*x) for x in w)


def accepts(M: Dfa, w: Word | Sequence[Letter]) -> bool:
    """Run the machine on ``w`` exactly as given (no mirroring)."""
    s = M.run(_word_letters(M, w))
    return s is not None and s in M.accepting


def reachable(M: Dfa) -> set[State]:
    seen = {M.initial}
    queue = deque([M.initial])
    while queue:
        s = queue.popleft()
        for x in M.alphabet:
            t = M.delta.get((s, x))
            if t is not None and t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def prune(M: Dfa) -> Dfa:
    """Drop states unreachable from the initial state."""
    keep = reachable(M)
    delta = {(s, x): t for (s, x), t in M.delta.items() if s in keep}
    return Dfa(M.n, M.alphabet, tuple(keep), M.initial, delta, M.accepting & keep)


def _coreachable(M: Dfa, states: set) -> set:
    back: dict = {}
    for (s, _), t in M.delta.items():
        back.setdefault(t, set()).add(s)
    good = set(M.accepting & states)
    queue = deque(good)
    while queue:
        t = queue.popleft()
        for s in back.get(t, ()):
            if s in states and s not in good:
                good.add(s)
                queue.append(s)
    return good


def minimize(M: Dfa) -> Dfa:
    """Moore partition refinement on the trimmed machine.

    Each block is labelled by its least member (by label text), so minimising
    a minimal machine returns it unchanged.
    """
    live = _coreachable(M, reachable(M))
    if M.initial not in live:
        return Dfa(M.n, M.alphabet, (M.initial,), M.initial, {}, frozenset())
    # block ids: -1 is the dead block
    block = {s: int(s in M.accepting) for s in live}
    while True:
        sig = {}
        for s in live:
            row = tuple(block.get(M.delta.get((s, x)), -1) for x in M.alphabet)
            sig[s] = (block[s], row)
        keys = {v: i for i, v in enumerate(sorted(set(sig.values())))}
        refined = {s: keys[sig[s]] for s in live}
        if len(keys) == len(set(block.values())):
            block = refined
            break
        block = refined
    rep: dict = {}
    for s in sorted(live, key=str):
        rep.setdefault(block[s], s)
    rep[block[M.initial]] = M.initial
    delta = {}
    for s in live:
        for x in M.alphabet:
            t = M.delta.get((s, x))
            if t in live:
                delta[(rep[block[s]], x)] = rep[block[t]]
    states = set(rep.values())
    accepting = {rep[block[s]] for s in live if s in M.accepting}
    return Dfa(M.n, M.alphabet, tuple(states), rep[block[M.initial]], delta, accepting)


def count_accepted(M: Dfa, length: int) -> int:
    """Number of accepted words of exactly ``length`` letters (path counting)."""
    if length < 0:
        raise ValueError("length must be non-negative")
    counts = {M.initial: 1}
    for _ in range(length):
        nxt: dict = {}
        for s, c in counts.items():
            for x in M.alphabet:
                t = M.delta.get((s, x))
                if t is not None:
                    nxt[t] = nxt.get(t, 0) + c
        counts = nxt
    return sum(c for s, c in counts.items() if s in M.accepting)


def language(M: Dfa, max_length: int) -> set[tuple[Letter, ...]]:
    """All accepted words up to ``max_length``, by breadth-first expansion."""
    out = set()
    layer = [((), M.initial)]
    for _ in range(max_length + 1):
        nxt = []
        for w, s in layer:
            if s in M.accepting:
                out.add(w)
            for x in M.alphabet:
                t = M.delta.get((s, x))
                if t is not None:
                    nxt.append((w + (x,), t))
        layer = nxt
    return out


# --- export / import -----------------------------------------------------------

def export_text(M: Dfa) -> str:
    ids = {s: i for i, s in enumerate(M.states)}
    lines = [f"n={M.n}", "alphabet=" + ",".join(str(x) for x in M.alphabet)]
    lines += [f"state {ids[s]} label={s}" for s in M.states]
    for s in M.states:
        for x in M.alphabet:
            t = M.delta.get((s, x))
            if t is not None:
                lines.append(f"{ids[s]} --{x}--> {ids[t]}")
    return "\n".join(lines) + "\n"


def export_dot(M: Dfa) -> str:
    ids = {s: i for i, s in enumerate(M.states)}
    lines = ["digraph automaton {", "  rankdir=LR;", "  __start [shape=point];"]
    for s in M.states:
        shape = "circle" if s in M.accepting else "box"
        lines.append(f'  {ids[s]} [shape={shape}, label="{s}"];')
    lines.append(f"  __start -> {ids[M.initial]};")
    for s in M.states:
        for x in M.alphabet:
            t = M.delta.get((s, x))
            if t is not None:
                lines.append(f'  {ids[s]} -> {ids[t]} [label="{x}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(M: Dfa, fmt: str) -> bytes:
    if fmt == "dot":
        return export_dot(M).encode()
    if fmt == "text":
        return export_text(M).encode()
    raise AutomatonError(f"unknown export format {fmt!r}")


_STATE_LINE = re.compile(r"^state (\d+) label=(.*)$")
_EDGE_LINE = re.compile(r"^(\d+) --(\d+)\.(\d+)--> (\d+)$")


def _parse_label(text: str) -> State:
    try:
        return StateLabel.parse(text)
    except (AutomatonError, ValueError):
        return text


def import_text(text: str | bytes) -> Dfa:
    """Inverse of :func:`export_text` (all listed states accepting)."""
    if isinstance(text, bytes):
        text = text.decode()
    lines = text.splitlines()
    if len(lines) < 3 or not lines[0].startswith("n=") or not lines[1].startswith("alphabet="):
        raise AutomatonError("not a structured-text automaton")
    n = int(lines[0][2:])
    toks = lines[1][len("alphabet="):]
    alphabet = tuple(Letter(*map(int, t.split("."))) for t in toks.split(",") if t)
    states: dict[int, State] = {}
    delta = {}
    for line in lines[2:]:
        if m := _STATE_LINE.match(line):
            states[int(m.group(1))] = _parse_label(m.group(2))
        elif m := _EDGE_LINE.match(line):
            x = Letter(int(m.group(2)), int(m.group(3)))
            delta[(states[int(m.group(1))], x)] = states[int(m.group(4))]
        elif line.strip():
            raise AutomatonError(f"unrecognised line {line!r}")
    if 0 not in states:
        raise AutomatonError("no initial state")
    return Dfa(n, alphabet, tuple(states.values()), states[0], delta)
