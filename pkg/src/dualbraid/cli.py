"""
Command-line entry point.

    dualbraid normalize --n 3 "1.2 2.3 1.2 2.3"
    dualbraid split     --n 3 "1.2 2.3 1.2 2.3"
    dualbraid reverse   --n 3 "1.2 2.3 1.2 1.3!"
    dualbraid accept    --n 3 "1.2 1.3 1.2 1.2" [--raw] [--star]
    dualbraid build     --n 4 [--star] [--minimize] [--full] --format dot|text
    dualbraid count     --n 3 --len 2
    dualbraid sigma     --n 4 "3.4! 1.2"
    dualbraid witness   --k 3
    dualbraid oracle count --n 3 --len 4

Exit status: 0 on success, 1 on domain errors or failed checks, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
from typing import Sequence, TextIO

from .automata import accepts, close, count_accepted, export, minimize, prune
from .construction import build_A, build_P_star
from .errors import BraidError
from .oracle import DEFAULT_MAX_VISITED, count_classes
from .reversing import DEFAULT_MAX_STEPS, left_reverse
from .sigma import sigma_definite_rep, sigma_scan, to_artin
from .splitting import phi_splitting, rotating_normal_form
from .witness import witness_pair, witness_report
from .words import format_word, mirror, parse_word


@dataclasses.dataclass(frozen=True)
class Config:
    n: int | None = None
    max_visited: int = DEFAULT_MAX_VISITED
    max_steps: int = DEFAULT_MAX_STEPS
    fmt: str = "text"

    def __post_init__(self):
        if self.max_visited <= 0 or self.max_steps <= 0:
            raise BraidError("budgets must be positive")
        if self.n is not None and self.n < 2:
            raise BraidError(f"--n must be at least 2, got {self.n}")


def _config(args) -> Config:
    return Config(
        n=getattr(args, "n", None),
        max_visited=args.max_visited,
        max_steps=args.max_steps,
        fmt=getattr(args, "format", "text"),
    )


def _word(cfg: Config, text: str):
    return parse_word(text, cfg.n)


def _show(w) -> str:
    return str(w) or "e"


def cmd_normalize(args, cfg: Config, out: TextIO) -> int:
    print(_show(rotating_normal_form(cfg.n, _word(cfg, args.word))), file=out)
    return 0


def cmd_split(args, cfg: Config, out: TextIO) -> int:
    print(phi_splitting(cfg.n, _word(cfg, args.word)), file=out)
    return 0


def cmd_reverse(args, cfg: Config, out: TextIO) -> int:
    frac = left_reverse(cfg.n, _word(cfg, args.word), args.strategy, cfg.max_steps)
    print(f"D: {_show(frac.denominator)}", file=out)
    print(f"N: {_show(frac.numerator)}", file=out)
    return 0


def cmd_accept(args, cfg: Config, out: TextIO) -> int:
    w = _word(cfg, args.word)
    machine = close(build_P_star(cfg.n)) if args.star else build_A(cfg.n)
    fed = w if args.raw else mirror(w)
    print("ACCEPT" if accepts(machine, fed) else "REJECT", file=out)
    return 0


def cmd_build(args, cfg: Config, out: TextIO) -> int:
    machine = close(build_P_star(cfg.n, args.full)) if args.star else build_A(cfg.n, args.full)
    if not args.full:
        machine = prune(machine)
    if args.minimize:
        machine = minimize(machine)
    out.write(export(machine, cfg.fmt).decode())
    return 0


def cmd_count(args, cfg: Config, out: TextIO) -> int:
    got = count_accepted(build_A(cfg.n), args.len)
    expected = count_classes(cfg.n, args.len, cfg.max_visited)
    print(f"automaton={got} oracle={expected}", file=out)
    return 0 if got == expected else 1


def cmd_sigma(args, cfg: Config, out: TextIO) -> int:
    _, rep = sigma_definite_rep(cfg.n, _word(cfg, args.word))
    _, verdict = sigma_scan(to_artin(cfg.n, rep))
    print(_show(rep), file=out)
    print(f"artin: {to_artin(cfg.n, rep)}", file=out)
    print(f"verdict: {verdict}", file=out)
    return 0 if verdict != "mixed" else 1


def cmd_witness(args, cfg: Config, out: TextIO) -> int:
    w, w2 = witness_pair(args.k)
    print(f"w  = {w}", file=out)
    print(f"w' = {w2}", file=out)
    ok = True
    for name, passed in witness_report(args.k).items():
        print(f"{'PASS' if passed else 'FAIL'} {name}", file=out)
        ok &= passed
    return 0 if ok else 1


def cmd_oracle_count(args, cfg: Config, out: TextIO) -> int:
    print(count_classes(cfg.n, args.len, cfg.max_visited), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dualbraid", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--max-visited", type=int, default=DEFAULT_MAX_VISITED,
                        help="budget for brute-force enumerations")
    parser.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS,
                        help="budget for one-step reversing")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_n(name, func, help_text, word=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, required=True, help="strand count")
        if word:
            p.add_argument("word", help='word such as "1.2 2.3 1.3!"')
        p.set_defaults(func=func)
        return p

    with_n("normalize", cmd_normalize, "print the rotating normal form")
    with_n("split", cmd_split, "print the phi-splitting, leftmost entry first")
    p = with_n("reverse", cmd_reverse, "left-reverse a signed word")
    p.add_argument("--strategy", choices=("leftmost", "rightmost"), default="leftmost")
    p = with_n("accept", cmd_accept, "run the rotating-word automaton")
    p.add_argument("--raw", action="store_true", help="feed the word without mirroring")
    p.add_argument("--star", action="store_true", help="use the closure of P*_n instead of A_n")
    p = with_n("build", cmd_build, "export an automaton", word=False)
    p.add_argument("--star", action="store_true", help="closure of P*_n instead of A_n")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--full", action="store_true", help="keep unreachable product states")
    p.add_argument("--format", choices=("dot", "text"), default="text")
    p = with_n("count", cmd_count, "compare automaton and oracle counts", word=False)
    p.add_argument("--len", type=int, required=True)
    with_n("sigma", cmd_sigma, "sigma-definite representative of a braid")
    p = sub.add_parser("witness", help="check the non-automaticity witness")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_witness)
    oracle = sub.add_parser("oracle", help="brute-force oracle queries")
    osub = oracle.add_subparsers(dest="oracle_command", required=True)
    p = osub.add_parser("count", help="number of braids of a given length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--len", type=int, required=True)
    p.set_defaults(func=cmd_oracle_count)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, _config(args), out)
    except BraidError as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
