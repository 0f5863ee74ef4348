"""
knot-obstruct: invariants of sums of torus knots and the L-space concordance
obstruction.

    knot-obstruct alex "T(4,5) # T(4,5)"
    knot-obstruct obstruct "T(2,9) # -T(2,3)" --json
    knot-obstruct signature "T(3,7)" --svg fig.svg
"""
from __future__ import annotations

import argparse
import logging
import re
import sys
import time
from pathlib import Path

from . import output
from .obstruction import obstruct, tau, verify_main_theorem
from .parser import ExpressionError, parse
from .polycore import sum_alexander, sum_alexander_factored
from .selftest import default_suites
from .signature import jump_spectrum, signature_function


# argparse would read "-T(3,4) # ..." as an option; a leading space hides the dash
# from it and the expression grammar ignores whitespace.
_MIRROR_EXPR = re.compile(r"^-\s*T\s*\(")


class UsageError(Exception):
    pass


def _knot(args):
    try:
        return parse(args.expr)
    except ExpressionError as exc:
        raise UsageError(f"{exc}\n{exc.caret()}") from None


def _write(text: str, dest: str | None, out):
    if dest in (None, "-"):
        out.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def cmd_alex(args, out) -> int:
    K = _knot(args)
    poly = sum_alexander(K)
    out.write(f"{poly}\n")
    out.write(f"factorization: {sum_alexander_factored(K)}\n")
    out.write(f"degree: {poly.degree()}\n")
    return 0


def cmd_tau(args, out) -> int:
    out.write(f"{tau(_knot(args))}\n")
    return 0


def cmd_jumps(args, out) -> int:
    spec = jump_spectrum(_knot(args))
    if args.half:
        spec = spec.restricted()
    out.write(output.jumps_table(spec))
    return 0


def cmd_signature(args, out) -> int:
    K = _knot(args)
    f = signature_function(K)
    wrote = False
    if args.csv is not None:
        _write(output.signature_csv(f), args.csv, out)
        wrote = True
    if args.svg is not None:
        _write(output.signature_svg(f, title=f"signature of {K}"), args.svg, out)
        wrote = True
    if not wrote:
        out.write(output.signature_text(f))
    return 0


def cmd_obstruct(args, out) -> int:
    report = obstruct(_knot(args), leading_terms_check=not args.no_leading_terms)
    out.write(output.report_json(report) if args.json else output.report_text(report))
    return 0


def cmd_enumerate(args, out) -> int:
    start = time.perf_counter()
    sweep = verify_main_theorem(args.p_max, args.q_max, args.n)
    for line in sweep.lines():
        out.write(line + "\n")
    out.write(f"elapsed: {time.perf_counter() - start:.2f}s\n")
    return 0 if sweep.ok else 1


def cmd_selftest(args, out) -> int:
    failed = 0
    for suite in default_suites(sample=args.sample, seed=args.seed):
        start = time.perf_counter()
        bad = suite.run()
        status = "PASS" if not bad else "FAIL"
        out.write(f"{status} {suite.name} ({time.perf_counter() - start:.2f}s)\n")
        for line in bad[:10]:
            out.write(f"    {line}\n")
        failed += bool(bad)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knot-obstruct", description=__doc__.strip().splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def knot_cmd(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("expr", help='knot expression, e.g. "T(2,5) # -T(2,3)"')
        p.set_defaults(func=func)
        return p

    knot_cmd("alex", cmd_alex, "Alexander polynomial and its cyclotomic factorization")
    knot_cmd("tau", cmd_tau, "tau invariant")
    p = knot_cmd("jumps", cmd_jumps, "signature jump spectrum")
    p.add_argument("--half", action="store_true", help="only angles in (0, 1/2]")
    p = knot_cmd("signature", cmd_signature, "Levine-Tristram signature step function")
    p.add_argument("--csv", nargs="?", const="-", metavar="PATH", help="sample values as CSV")
    p.add_argument("--svg", metavar="PATH", help="step plot on [0, 1/2]")
    p = knot_cmd("obstruct", cmd_obstruct, "run the obstruction checks")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-leading-terms", action="store_true",
                   help="skip the leading-terms check on the pinned polynomial")

    p = sub.add_parser("enumerate", help="sweep all positive sums in range")
    p.add_argument("--p-max", type=int, default=7)
    p.add_argument("--q-max", type=int, default=7)
    p.add_argument("--n", type=int, nargs="+", default=[1, 2, 3])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("selftest", help="identity and property suites")
    p.add_argument("--sample", type=int, default=60, help="random sums per sampled suite")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    argv = [" " + a if _MIRROR_EXPR.match(a) else a for a in argv]
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"knot-obstruct {args.command}: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, ValueError, OSError) as exc:
        print(f"knot-obstruct {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
