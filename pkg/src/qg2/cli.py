"""``qg2`` command line: ``verify``, ``reduce`` and ``param``.

Exit codes: 0 on success or a passing suite, 1 on a failing suite, 2 on a
usage error (bad flags, unknown suite or parameter, unparsable expression).
"""

from __future__ import annotations

import argparse
import sys

from .coeff import param, param_names
from .parse import ParseError, parse_expr, parse_scalar, quotient_context
from .quotient import NonTermination, quotient
from .suites import SUITES, Options, UsageError, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser():
    p = argparse.ArgumentParser(prog="qg2", description="Exact computations in U_q^+(G2) and its simple quotients.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--alpha", help="first central parameter, an expression in q")
    v.add_argument("--beta", help="second central parameter, an expression in q")
    v.add_argument("--max-degree", type=_nonneg, default=6, help="x-component of the root-degree cap for samples")
    v.add_argument("--samples", type=_nonneg, default=50)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", metavar="PATH", help="also write the report as JSON ('-' for stdout)")
    v.add_argument("--fast", action="store_true", help="test sampled identities at 3 random q0 instead of exactly")
    v.add_argument("--no-timing", action="store_true", help="report duration_ms as 0 so reports are byte-stable")

    r = sub.add_parser("reduce", help="normal form of an expression in e1..e6")
    r.add_argument("expr")
    r.add_argument("--alpha", required=True)
    r.add_argument("--beta", required=True)
    r.add_argument("--oracle", action="store_true", help="also print the image in the rank-4 torus")

    pa = sub.add_parser("param", help="print a named scalar from the parameter table")
    pa.add_argument("name")
    return p


def _verify(args, out):
    opts = Options(args.alpha, args.beta, args.max_degree, args.samples, args.seed, args.fast)
    report = run_suite(args.suite, opts, timing=not args.no_timing)
    if args.json == "-":
        out.write(report.to_json())
    else:
        print(report.summary(), file=out)
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
    return EXIT_PASS if report.passed else EXIT_FAIL


def _reduce(args, out):
    try:
        alpha, beta = parse_scalar(args.alpha), parse_scalar(args.beta)
    except ParseError as exc:
        raise UsageError(f"bad parameter: {exc}") from None
    if not alpha and not beta:
        raise UsageError("(alpha, beta) must not both be zero")
    Q = quotient(alpha, beta)
    x = parse_expr(args.expr, quotient_context(Q))
    x = Q.reduce(x)
    print(x, file=out)
    if args.oracle:
        print(f"torus image: {x.torus_image()}", file=out)
    return EXIT_PASS


def _param(args, out):
    try:
        value = param(args.name)
    except KeyError:
        raise UsageError(f"unknown parameter {args.name!r}; known: {', '.join(param_names())}") from None
    print(value, file=out)
    return EXIT_PASS


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    handler = {"verify": _verify, "reduce": _reduce, "param": _param}[args.command]
    try:
        return handler(args, out)
    except (UsageError, ParseError) as exc:
        print(f"qg2: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonTermination as exc:
        print(f"qg2: reduction did not terminate: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
