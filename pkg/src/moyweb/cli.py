"""Command-line interface: ``moyweb eval|oracle|link|check``.

Exit status: 0 success, 1 input error, 2 internal invariant breach,
3 check failure or mismatch. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from math import comb
from pathlib import Path

from .chi_oracle import count_set_colourings, verify_moves_at_one
from .moves import all_fixtures, check_move, move_evaluator
from .moyeval import NonIntegralResult, eval_link, evaluate
from .moygraph import (
    ParseError,
    ValidationError,
    genus,
    link_genus,
    parse_lnk,
    parse_moy,
    validate_link,
    with_n,
)
from .qpoly import DivisionFailure, eval_at_one, grassmann_poincare, grassmann_recurrence
from .repvar import check_product_lemma

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_FAIL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _n_override(text: str) -> int:
    n = int(text)
    if not 2 <= n <= 12:
        raise argparse.ArgumentTypeError(f"--n must be within 2..12, got {n}")
    return n


def _tol(text: str) -> float:
    t = float(text)
    if not t > 0:
        raise argparse.ArgumentTypeError(f"--tol must be positive, got {text}")
    return t


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None


def _load_graph(path: str, n: int | None):
    try:
        g = parse_moy(_read(path))
        g = with_n(g, n) if n is not None else g
    except (ParseError, ValidationError) as exc:
        raise InputError(f"{path}: {exc}") from None
    if (k := genus(g)) > 0:
        print(f"warning: {path}: rotation system has genus {k}; "
              "values are only meaningful for planar graphs", file=sys.stderr)
    return g


def _load_link(path: str, n: int | None):
    try:
        d = parse_lnk(_read(path))
        if n is not None:
            d = replace(d, n=n)
            validate_link(d)
    except (ParseError, ValidationError) as exc:
        raise InputError(f"{path}: {exc}") from None
    if (k := link_genus(d)) > 0:
        print(f"warning: {path}: diagram has genus {k}; "
              "values are only meaningful for plane diagrams", file=sys.stderr)
    return d


def _emit(args, path: str, poly) -> None:
    if args.json:
        print(json.dumps({"graph": path, "poly": str(poly), "at_one": eval_at_one(poly)}))
    elif args.at_one:
        print(eval_at_one(poly))
    else:
        print(poly)


def cmd_eval(args) -> int:
    for path in args.files:
        _emit(args, path, evaluate(_load_graph(path, args.n)))
    return EXIT_OK


def cmd_link(args) -> int:
    for path in args.files:
        _emit(args, path, eval_link(_load_link(path, args.n)))
    return EXIT_OK


def cmd_oracle(args) -> int:
    status = EXIT_OK
    for path in args.files:
        g = _load_graph(path, args.n)
        count = count_set_colourings(g)
        record = {"graph": path, "count": count}
        text = str(count)
        if args.compare:
            value = eval_at_one(evaluate(g))
            match = value == count
            record.update(at_one=value, match=match)
            text += " MATCH" if match else f" MISMATCH (polynomial at one: {value})"
            if not match:
                status = EXIT_FAIL
        print(json.dumps(record) if args.json else text)
    return status


def _check_moves(args) -> bool:
    ok = True
    evaluators = {}
    for f in all_fixtures(args.n or 5):
        ev = evaluators.setdefault(f.move, move_evaluator(f.move))
        m = check_move(f, ev)
        print(f"PASS move {f.name}" if m is None else f"FAIL {m}")
        ok &= m is None
    return ok


def _check_moves_at_one(args) -> bool:
    ok = True
    for f in all_fixtures(args.n or 6):
        m = verify_moves_at_one(f.move, f.params, f.n, f.mirror)
        print(f"PASS move-at-one {f.name}" if m is None else f"FAIL {m}")
        ok &= m is None
    return ok


def _check_grassmann(args) -> bool:
    ok = True
    top = args.n or 8
    for n in range(1, top + 1):
        for k in range(1, n + 1):
            lhs, rhs = grassmann_recurrence(k, n)
            good = lhs == rhs and eval_at_one(grassmann_poincare(k, n)) == comb(n, k)
            print(f"{'PASS' if good else 'FAIL'} grassmann k={k},n={n}")
            ok &= good
    return ok


def _check_sun(args) -> bool:
    ok = True
    top = args.n or 5
    for n in range(2, top + 1):
        for i in range(1, n):
            for j in range(1, n - i + 1):
                rep = check_product_lemma(i, j, n, args.trials, args.tol, seed=args.seed)
                worst = max((line.residual for line in rep.lines if "in_class=True" in line.ids),
                            default=0.0)
                print(f"{'PASS' if rep.ok else 'FAIL'} product_lemma i={i},j={j},n={n},"
                      f"trials={args.trials} residual={worst:.3e}")
                for line in rep.failures():
                    print(line)
                ok &= rep.ok
    return ok


SUITES = {
    "moves": _check_moves,
    "moves-at-one": _check_moves_at_one,
    "grassmann": _check_grassmann,
    "sun": _check_sun,
}


def cmd_check(args) -> int:
    return EXIT_OK if SUITES[args.suite](args) else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors, not internal ones
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="moyweb", description="MOY polynomials of coloured webs.")
    sub = p.add_subparsers(dest="command", required=True)

    def files_cmd(name, func, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("files", nargs="+")
        s.add_argument("--n", type=_n_override, help="read the input at this N")
        s.add_argument("--json", action="store_true", help="one JSON object per input")
        s.set_defaults(func=func)
        return s

    s = files_cmd("eval", cmd_eval, "evaluate .moy graphs")
    s.add_argument("--at-one", action="store_true", help="print the value at q = 1")
    s = files_cmd("link", cmd_link, "evaluate .lnk link diagrams")
    s.add_argument("--at-one", action="store_true", help="print the value at q = 1")
    s = files_cmd("oracle", cmd_oracle, "count set colourings of .moy graphs")
    s.add_argument("--compare", action="store_true", help="compare with the polynomial at q = 1")

    s = sub.add_parser("check", help="run a verification suite")
    s.add_argument("suite", choices=sorted(SUITES))
    s.add_argument("--n", type=_n_override, help="largest N to include")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--tol", type=_tol, default=1e-9)
    s.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NonIntegralResult, DivisionFailure) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
