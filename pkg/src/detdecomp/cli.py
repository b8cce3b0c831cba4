"""Command-line interface: ``detdecomp <command> [options]``.

Exit codes: 0 success, 1 verification/check mismatch, 2 usage error,
3 inadmissible field (characteristic 2, composite modulus, char <= n for
Waring), 4 malformed input file.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import __version__
from .errors import DetDecompError, FieldError, ParseError
from .evaluate import det_oracle, eval_count_mults, eval_decomposition, random_matrix, read_matrix
from .fields import Field
from .formulas import FORMULAS, generate, rank_bound
from .io import read_decomposition, write_decomposition
from .polyforms import chow_to_waring, format_chow, format_waring, to_chow
from .report import format_table, plot_rank_bounds
from .verify import rank_bound_table, verify

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_FIELD = 3
EXIT_INPUT = 4


class UsageError(Exception):
    pass


def _field(text):
    try:
        return Field.from_tag(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_source(p):
    p.add_argument("--n", type=int, help="matrix order")
    p.add_argument("--formula", choices=FORMULAS, default="best",
                   help="generator (default: best; odd n costs n times the even case below it)")
    p.add_argument("--field", type=_field, default=Field(), help="Q (default) or fp:<p>")
    p.add_argument("--input", "-i", type=Path, help="read a detdecomp file instead of generating")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="detdecomp",
                                     description="Exact rank decompositions of det_n.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--jobs", "-j", type=int, default=None,
                        help="worker processes for expansion (fallback: $DETDECOMP_JOBS)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a decomposition file")
    _add_source(p)
    p.add_argument("--output", "-o", type=Path)

    p = sub.add_parser("verify", help="expand and compare with the Leibniz tensor")
    _add_source(p)

    p = sub.add_parser("eval", help="evaluate det(A) through a decomposition")
    _add_source(p)
    p.add_argument("--matrix", "-m", type=Path, help="matrix file: n, then n rows")
    p.add_argument("--check", action="store_true", help="also compare with Gaussian elimination")
    p.add_argument("--random", type=int, metavar="COUNT",
                   help="check COUNT seeded random matrices against elimination instead")
    p.add_argument("--seed", type=int, default=0)

    for name, desc in (("chow", "products of linear forms"), ("waring", "sums of powers")):
        p = sub.add_parser(name, help=f"export the {desc} form")
        _add_source(p)
        p.add_argument("--output", "-o", type=Path)

    p = sub.add_parser("count", help="term count, C_n bound and multiplication count")
    _add_source(p)

    p = sub.add_parser("table", help="B_n vs C_n comparison")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--delimiter", default=",")
    p.add_argument("--plot", type=Path, help="also render the comparison figure to this file")
    return parser


def _source(args):
    if args.input is not None:
        return read_decomposition(args.input.read_bytes())
    if args.n is None:
        raise UsageError("either --input or --n is required")
    if args.n < 1:
        raise UsageError("--n must be positive")
    try:
        return generate(args.formula, args.n, args.field)
    except DetDecompError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, path, out):
    if path is None:
        out.write(text)
    else:
        Path(path).write_bytes(text.encode("utf-8"))


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args, args.jobs, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"detdecomp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FieldError as exc:
        print(f"detdecomp: field error: {exc}", file=sys.stderr)
        return EXIT_FIELD
    except (ParseError, OSError) as exc:
        print(f"detdecomp: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _dispatch(args, jobs, out) -> int:
    cmd = args.command
    if cmd == "table":
        if args.max_n < 2:
            raise UsageError("--max-n must be at least 2")
        rows = rank_bound_table(args.max_n)
        out.write(format_table(rows, args.delimiter))
        if args.plot is not None:
            plot_rank_bounds(rows, args.plot)
        return 0

    d = _source(args)
    F = d.field
    if cmd == "gen":
        data = write_decomposition(d)
        if args.output is None:
            out.write(data.decode("utf-8"))
        else:
            args.output.write_bytes(data)
        return 0
    if cmd == "verify":
        report = verify(d, jobs=jobs)
        out.write(report.summary() + "\n")
        return 0 if report.is_exact_match else EXIT_MISMATCH
    if cmd == "eval":
        if args.random is not None:
            rng = random.Random(args.seed)
            bad = 0
            for _ in range(args.random):
                A = random_matrix(d.order_n, F, rng)
                if eval_decomposition(d, A) != det_oracle(A):
                    bad += 1
            out.write(f"matrices={args.random} seed={args.seed} mismatches={bad}\n")
            return 0 if bad == 0 else EXIT_MISMATCH
        if args.matrix is None:
            raise UsageError("eval needs --matrix or --random")
        A = read_matrix(args.matrix.read_text(encoding="utf-8"), F)
        value = eval_decomposition(d, A)
        out.write(F.format(value) + "\n")
        if args.check and value != det_oracle(A):
            print(f"detdecomp: elimination gives {F.format(det_oracle(A))}", file=sys.stderr)
            return EXIT_MISMATCH
        return 0
    if cmd == "chow":
        _emit(format_chow(to_chow(d)), args.output, out)
        return 0
    if cmd == "waring":
        _emit(format_waring(chow_to_waring(to_chow(d))), args.output, out)
        return 0
    if cmd == "count":
        n = d.order_n
        bound = rank_bound(n) if n >= 2 else 1
        out.write(f"n={n} terms={len(d)} bound={bound} mults={eval_count_mults(d, n)}\n")
        return 0
    raise UsageError(f"unknown command {cmd}")


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
