"""
The inductive automata for mirrored rotating words.

    P*_2        one state looping on a12, I(a12) pointing at it
    P0_n        P*_{n-1} plus a memory of the a(p,n)-barriers read so far
    Pk_n        P0_n with letters and states moved by phi_n^k
    P*_n        the n twisted copies plugged in a cycle
    A_n         A_{n-1} followed by P*_n, grounded at the one-state A_2

All machines read mirrored words. States are :class:`StateLabel` paths; only
states reachable from the initial map are built unless ``full=True``.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache

from .automata import Dfa, PartialAutomaton, StateLabel, close
from .errors import AutomatonError, StrandError
from .words import Letter, alphabet, phi_letter

A2_STATE = StateLabel((), "A2")
P2_STATE = StateLabel((), "P2")


def bar_mask(n: int, x: Letter) -> int:
    """Bitmask of the letters a(p,n) with x.p < p < x.q (bit p-2)."""
    m = 0
    for p in range(x.p + 1, x.q):
        m |= 1 << (p - 2)
    return m


def mask_letters(n: int, mask: int) -> frozenset[Letter]:
    return frozenset(Letter(p, n) for p in range(2, n) if mask >> (p - 2) & 1)


def _wrap(k: int, inner: StateLabel, mask: int) -> StateLabel:
    return StateLabel(((k, mask),) + inner.path, inner.base)


def build_A2() -> Dfa:
    x = Letter(1, 2)
    return Dfa(2, (x,), (A2_STATE,), A2_STATE, {(A2_STATE, x): A2_STATE})


def build_P_star_base() -> PartialAutomaton:
    """P*_2: the recursion's ground, recognising every a12^k."""
    x = Letter(1, 2)
    return PartialAutomaton(2, (x,), (P2_STATE,), {x: P2_STATE}, {(P2_STATE, x): P2_STATE})


class _Inner:
    """Transition oracle for P0_n computed on demand from P*_{n-1}."""

    def __init__(self, n: int):
        self.n = n
        self.star = build_P_star(n - 1)
        self.small = alphabet(n - 1)

    def init(self, x: Letter) -> StateLabel | None:
        s = self.star.initial_map.get(x)
        return None if s is None else _wrap(0, s, bar_mask(self.n, x))

    def step(self, state: StateLabel, x: Letter) -> StateLabel | None:
        (_, mask), *rest = state.path
        inner = StateLabel(tuple(rest), state.base)
        t = self.star.delta.get((inner, x))
        return None if t is None else _wrap(0, t, mask | bar_mask(self.n, x))

    def all_states(self) -> list[StateLabel]:
        masks = range(1 << max(self.n - 3, 0))
        return [_wrap(0, s, m) for s in self.star.states for m in masks]


def _explore(n, alphabet_, seeds, step) -> tuple[list, dict]:
    states = list(dict.fromkeys(seeds))
    seen = set(states)
    delta = {}
    queue = deque(states)
    while queue:
        s = queue.popleft()
        for x in alphabet_:
            t = step(s, x)
            if t is None:
                continue
            delta[(s, x)] = t
            if t not in seen:
                seen.add(t)
                states.append(t)
                queue.append(t)
    return states, delta


def build_P0(n: int, full: bool = False) -> PartialAutomaton:
    if n < 3:
        raise StrandError(f"P0_n needs n >= 3, got {n}")
    inner = _Inner(n)
    imap = {x: s for x in inner.small if (s := inner.init(x)) is not None}
    seeds = inner.all_states() if full else list(imap.values())
    states, delta = _explore(n, inner.small, seeds, inner.step)
    return PartialAutomaton(n, inner.small, tuple(states), imap, delta)


def _relabel(state: StateLabel, k: int) -> StateLabel:
    (_, mask), *rest = state.path
    return StateLabel(((k, mask), *rest), state.base)


def build_Pk(n: int, k: int, full: bool = False) -> PartialAutomaton:
    if not 1 <= k <= n - 1:
        raise AutomatonError(f"component index {k} outside [1, {n - 1}]")
    P0 = build_P0(n, full)
    move = {x: phi_letter(n, k, x) for x in P0.alphabet}
    return PartialAutomaton(
        n,
        tuple(sorted(move.values())),
        tuple(_relabel(s, k) for s in P0.states),
        {move[x]: _relabel(s, k) for x, s in P0.initial_map.items()},
        {(_relabel(s, k), move[x]): _relabel(t, k) for (s, x), t in P0.delta.items()},
    )


@lru_cache(maxsize=None)
def _build_P_star(n: int, full: bool) -> PartialAutomaton:
    if n == 2:
        return build_P_star_base()
    inner = _Inner(n)
    letters = alphabet(n)

    def enter(k: int, y: Letter) -> StateLabel | None:
        # I^k(y): the twisted copy k started on y
        s = inner.init(phi_letter(n, -k, y)) if phi_letter(n, -k, y).q < n else None
        return None if s is None else _relabel(s, k % n)

    def step(state: StateLabel, y: Letter) -> StateLabel | None:
        k, mask = state.path[0]
        x = phi_letter(n, -k, y)
        if x.q < n:
            t = inner.step(_relabel(state, 0), x)
            return None if t is None else _relabel(t, k)
        p = x.p
        if p == n - 1 or (2 <= p <= n - 2 and mask >> (p - 2) & 1):
            return enter(k + 1, y)
        return None

    imap = {}
    for y in letters:
        if y.q != n:
            continue
        s = enter(2, y) if y.p == 1 else enter(1, y)
        if s is not None:
            imap[y] = s
    if full:
        seeds = [_relabel(s, k) for k in range(n) for s in inner.all_states()]
    else:
        seeds = list(imap.values())
    states, delta = _explore(n, letters, seeds, step)
    return PartialAutomaton(n, letters, tuple(states), imap, delta)


def build_P_star(n: int, full: bool = False) -> PartialAutomaton:
    """P*_n, recognising the mirrors of the rotating words that are empty or end in a(.,n)."""
    if n < 2:
        raise StrandError(f"P*_n needs n >= 2, got {n}")
    return _build_P_star(n, full)


@lru_cache(maxsize=None)
def _build_A(n: int, full: bool) -> Dfa:
    if n == 2:
        return build_A2()
    prev = _build_A(n - 1, full)
    star = _build_P_star(n, full)
    letters = alphabet(n)
    delta = dict(prev.delta)
    for s in prev.states:
        for y in letters:
            if y.q == n and y in star.initial_map:
                delta[(s, y)] = star.initial_map[y]
    delta.update(star.delta)
    return Dfa(n, letters, prev.states + star.states, prev.initial, delta)


def build_A(n: int, full: bool = False) -> Dfa:
    """A_n, recognising the mirrors of the n-rotating words."""
    if n < 2:
        raise StrandError(f"A_n needs n >= 2, got {n}")
    return _build_A(n, full)


def build_R_star(n: int, full: bool = False) -> Dfa:
    """The closure of P*_n."""
    return close(build_P_star(n, full))


def outer_memory(state: StateLabel | None, n: int) -> frozenset[Letter] | None:
    """The barrier memory stored in the outermost component of a P-state."""
    if state is None or not state.path:
        return None
    return mask_letters(n, state.path[0][1])
