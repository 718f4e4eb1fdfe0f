#!/usr/bin/env python3
# coding=utf-8

"""
Command-line front end: ``steenbolt generate|check|diff|compose|complexity|sq|bar-check|fixtures``.

Exit statuses: 0 when everything passes, 1 when an identity fails, 2 on usage and parse errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import TextIO

from vt.utils.commons.commons.core_py import not_none_not_unset
from vt.utils.errors.error_specs import ERR_INVALID_USAGE

from steenbolt.bar import (
    bar_basis,
    check_bar_differential,
    check_decomposition,
    check_hopf,
    check_steenrod_bar,
)
from steenbolt.constants import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, FIXTURE_NAMES
from steenbolt.exceptions import SteenboltException, SteenboltExitingException
from steenbolt.generators import generator
from steenbolt.models import CheckGridOpts, CheckReport
from steenbolt.relations import SUITES, suite_checks
from steenbolt.runner.simple_impl import SimpleCheckRunner
from steenbolt.simplicial import cohomology, cohomology_group, load_complex, steenrod_square
from steenbolt.surjection import chain_complexity, compose_chains, differential, parse_chain, print_chain
from steenbolt.utils import resolve_opts
from steenbolt.validators import UtilCheckArgsValidator, UtilGeneratorArgsValidator

logger = logging.getLogger(__name__)


# region commands
def cmd_generate(args: argparse.Namespace, out: TextIO) -> int:
    UtilGeneratorArgsValidator().validate(args.k, args.p, args.q, unsafe_large=args.unsafe_large)
    element = generator(args.k, args.p, args.q)
    print(print_chain(element.chain), file=out)
    if args.tables:
        for table in element.tables:
            print(str(table), file=out)
    return EXIT_PASS


def _emit(reports: Sequence[CheckReport], out: TextIO, timings: bool) -> int:
    failed = False
    for report in reports:
        print(report.certificate(timings), file=out)
        for line in report.dump():
            print(line, file=out)
        failed = failed or not report.passed
    return EXIT_FAIL if failed else EXIT_PASS


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    UtilCheckArgsValidator().validate_selection(args.k, args.m, args.n, args.max_k, args.max_arity)
    flags: CheckGridOpts = {
        "max_k": args.max_k,
        "max_arity": args.max_arity,
        "workers": args.workers,
        "unsafe_large": args.unsafe_large or None,
        "timings": args.timings or None,
    }
    opts = resolve_opts(flags)
    checks = suite_checks(
        args.suite,
        k=args.k,
        m=args.m,
        n=args.n,
        max_k=opts["max_k"],  # type: ignore[arg-type] # resolved with a default
        max_arity=opts["max_arity"],  # type: ignore[arg-type] # resolved with a default
        unsafe_large=bool(opts["unsafe_large"]),
    )
    workers = opts["workers"] if not_none_not_unset(opts.get("workers")) else None
    logger.info("running %d checks of suite %s", len(checks), args.suite)
    reports = SimpleCheckRunner().run_checks(checks, workers)  # type: ignore[arg-type] # resolved with a default
    return _emit(reports, out, bool(opts["timings"]))


def cmd_diff(args: argparse.Namespace, out: TextIO) -> int:
    print(print_chain(differential(parse_chain(args.chain))), file=out)
    return EXIT_PASS


def cmd_compose(args: argparse.Namespace, out: TextIO) -> int:
    result = compose_chains(parse_chain(args.outer), args.slot, parse_chain(args.inner))
    print(print_chain(result), file=out)
    return EXIT_PASS


def cmd_complexity(args: argparse.Namespace, out: TextIO) -> int:
    print(chain_complexity(parse_chain(args.chain)), file=out)
    return EXIT_PASS


def cmd_sq(args: argparse.Namespace, out: TextIO) -> int:
    complex_ = load_complex(args.complex)
    n, k = args.dim, args.k
    if not 0 <= k <= n:
        errmsg = f"Sq^{k} needs 0 <= {k} <= {n}."
        raise SteenboltExitingException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
    source = cohomology(complex_, n)
    target = cohomology_group(complex_, n + k)
    print(f"H^{n}({complex_}): rank {len(source)}", file=out)
    for j, c in enumerate(source):
        print(f"  h{n}_{j} = {c.representative}", file=out)
    print(f"H^{n + k}({complex_}): rank {target.rank}", file=out)
    for j, c in enumerate(target.basis):
        print(f"  h{n + k}_{j} = {c.representative}", file=out)
    images = [steenrod_square(c, k) for c in source]
    nonzero = any(not image.is_zero() for image in images)
    print(f"Sq^{k}: H^{n} -> H^{n + k} ({'nonzero' if nonzero else 'zero'})", file=out)
    for j, image in enumerate(images):
        terms = [f"h{n + k}_{i}" for i, bit in enumerate(image.coordinates) if bit]
        shown = f"[{' + '.join(terms)}]" if terms else "0"
        print(f"Sq^{k}: [h{n}_{j}] -> {shown} ({'zero' if image.is_zero() else 'nonzero'})", file=out)
    for row in range(target.rank):
        print("  " + " ".join(str(image.coordinates[row]) for image in images), file=out)
    return EXIT_PASS


def cmd_bar_check(args: argparse.Namespace, out: TextIO) -> int:
    trunc = bar_basis(load_complex(args.complex), args.max_len, args.max_deg, unsafe_large=args.unsafe_large)
    reports = [check_bar_differential(trunc), check_hopf(trunc)]
    if args.i >= 1:
        reports.append(check_steenrod_bar(args.i, trunc))
        reports.append(check_decomposition(args.i, trunc))
    return _emit(reports, out, args.timings)


def cmd_fixtures(args: argparse.Namespace, out: TextIO) -> int:
    for name in FIXTURE_NAMES:
        print(f"{name} {' '.join(map(str, load_complex(name).f_vector))}", file=out)
    return EXIT_PASS


# endregion


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steenbolt",
        description="Surjection operad multioperations, their relations and Steenrod cup-i products over F2.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr, repeat for debug")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="print E^k_{p,q}")
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--p", type=int, required=True)
    gen.add_argument("--q", type=int, required=True)
    gen.add_argument("--tables", action="store_true", help="also print the admissible tables")
    gen.add_argument("--unsafe-large", action="store_true", help="lift the string length guard")
    gen.set_defaults(func=cmd_generate)

    check = sub.add_parser("check", help="check a suite of identities in the operad")
    check.add_argument("suite", choices=SUITES)
    check.add_argument("--k", type=int)
    check.add_argument("--m", type=int)
    check.add_argument("--n", type=int)
    check.add_argument("--max-k", type=int)
    check.add_argument("--max-arity", type=int)
    check.add_argument("--workers", type=int, help="worker processes, results never depend on it")
    check.add_argument("--timings", action="store_true", help="append millis= to certificates")
    check.add_argument("--unsafe-large", action="store_true", help="lift the size guards")
    check.set_defaults(func=cmd_check)

    diff = sub.add_parser("diff", help="differential of a chain")
    diff.add_argument("chain")
    diff.set_defaults(func=cmd_diff)

    comp = sub.add_parser("compose", help="partial composition outer ∘_slot inner")
    comp.add_argument("outer")
    comp.add_argument("slot", type=int)
    comp.add_argument("inner")
    comp.set_defaults(func=cmd_compose)

    cx = sub.add_parser("complexity", help="complexity of a chain")
    cx.add_argument("chain")
    cx.set_defaults(func=cmd_complexity)

    sq = sub.add_parser("sq", help="Steenrod square Sq^k on H^dim of a complex")
    sq.add_argument("--complex", required=True, help=f"a file, or one of {', '.join(FIXTURE_NAMES)}")
    sq.add_argument("--dim", type=int, required=True)
    sq.add_argument("--k", type=int, required=True)
    sq.set_defaults(func=cmd_sq)

    bar = sub.add_parser("bar-check", help="check the bar construction identities on a truncation")
    bar.add_argument("--complex", required=True, help=f"a file, or one of {', '.join(FIXTURE_NAMES)}")
    bar.add_argument("--i", type=int, default=0)
    bar.add_argument("--max-len", type=int, default=2)
    bar.add_argument("--max-deg", type=int, help="bound on word weight")
    bar.add_argument("--timings", action="store_true", help="append millis= to certificates")
    bar.add_argument("--unsafe-large", action="store_true", help="lift the word length guard")
    bar.set_defaults(func=cmd_bar_check)

    fix = sub.add_parser("fixtures", help="list bundled complexes with their f-vectors")
    fix.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    """
    Run one subcommand and return its exit status.

    >>> import io
    >>> buf = io.StringIO()
    >>> main(["generate", "--k", "0", "--p", "1", "--q", "2"], buf), buf.getvalue()
    (0, '(1,2,1,3,1)\\n')
    """
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE
    logging.basicConfig(
        level={0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return int(args.func(args, out))
    except SteenboltException as e:
        print(f"steenbolt: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
