"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 arithmetic error,
3 step limit reached.
"""

import argparse
import os
import sys

from catnum import basic, blocks, complexity, core, dot, expr, giants
from catnum.errors import CatnumError, ParseError, SizeGuard, StepLimit
from catnum.instances import BinTree, MultiTree, ParenWord

VIEWS = ("decimal", "tree", "multiway", "parens")
REPORTS = ("decimal", "catsize", "bitsize")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; keep 2 for arithmetic.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _default_cap():
    raw = os.environ.get("CATNUM_CAP")
    if raw is None:
        return core.DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        return core.DEFAULT_CAP


def _add_cap(parser):
    parser.add_argument(
        "--cap",
        type=int,
        default=_default_cap(),
        help="bit cap for printing decimal values (env: CATNUM_CAP)",
    )


def build_parser():
    parser = _Parser(prog="catnum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expression")
    p.add_argument("--view", choices=VIEWS, default="decimal")
    _add_cap(p)

    p = sub.add_parser("analyze", help="size and depth metrics of a value")
    p.add_argument("expression")
    _add_cap(p)

    p = sub.add_parser("convert", help="convert between text formats")
    p.add_argument("value")
    p.add_argument("--from", dest="source", choices=("decimal", "parens"),
                   default="decimal")
    p.add_argument("--to", dest="target", choices=VIEWS, default="decimal")
    _add_cap(p)

    p = sub.add_parser("collatz", help="iterate the syracuse map")
    p.add_argument("expression")
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--report", choices=REPORTS, default="decimal")
    _add_cap(p)

    sub.add_parser("primes", help="record-prime size table")

    p = sub.add_parser("enumerate", help="all values of a given node count")
    p.add_argument("size", type=int)
    p.add_argument("--view", choices=VIEWS, default="decimal")
    _add_cap(p)

    p = sub.add_parser("dot", help="Graphviz export of a value's DAG")
    p.add_argument("expression")
    p.add_argument("--binary", action="store_true",
                   help="binary pairing view instead of multiway")
    p.add_argument("-o", "--output", default=None)
    _add_cap(p)

    p = sub.add_parser("bench", help="average successor cost")
    p.add_argument("--count", type=int, default=1 << 20)

    return parser


def render_value(x, view, cap):
    if view == "decimal":
        return _render_decimal(x, cap)
    if view == "tree":
        return repr(core.convert(x, BinTree))
    if view == "multiway":
        return repr(core.convert(x, MultiTree))
    return core.cat_show(x)


def _render_decimal(x, cap):
    try:
        return str(core.to_int(x, cap))
    except SizeGuard:
        size = core.to_int(complexity.catsize(x))
        bits = _render_decimal(blocks.bitsize(x), cap)
        return f"<bitsize {bits}, catsize {size}>"


def _cmd_eval(args):
    value = expr.eval_text(args.expression)
    print(render_value(value, args.view, args.cap))
    return 0


def _cmd_analyze(args):
    value = expr.eval_text(args.expression)
    cap = args.cap
    print(f"catsize: {core.to_int(complexity.catsize(value))}")
    print(f"bitsize: {_render_decimal(blocks.bitsize(value), cap)}")
    print(f"max_tdepth: {core.to_int(complexity.max_tdepth(value))}")
    print(f"max_mdepth: {core.to_int(complexity.max_mdepth(value))}")
    print(f"parity: {basic.parity(value).name.lower()}")
    try:
        print(f"value: {core.to_int(value, cap)}")
    except SizeGuard:
        pass
    return 0


def _cmd_convert(args):
    if args.source == "decimal":
        value = core.from_int(int(args.value))
    else:
        value = core.parse_paren(args.value)
    print(render_value(value, args.target, args.cap))
    return 0


def _cmd_collatz(args):
    value = expr.eval_text(args.expression)
    try:
        iterates = giants.nsyr(value, args.max_steps)
        status = 0
    except StepLimit as exc:
        iterates = exc.iterates
        status = 3
    for item in iterates:
        print(_report_line(item, args.report, args.cap))
    return status


def _report_line(x, report, cap):
    if report == "catsize":
        return str(core.to_int(complexity.catsize(x)))
    if report == "bitsize":
        return _render_decimal(blocks.bitsize(x), cap)
    return _render_decimal(x, cap)


def _cmd_primes(args):
    rows = [
        ("mersenne", giants.PrimeKind.MERSENNE, ""),
        ("generalized_fermat", giants.PrimeKind.GENERALIZED_FERMAT, ""),
        ("cullen", giants.PrimeKind.CULLEN, ""),
        ("woodall", giants.PrimeKind.WOODALL, ""),
        ("proth", giants.PrimeKind.PROTH, " (derived)"),
        ("sophie_germain", giants.PrimeKind.SOPHIE_GERMAIN, ""),
        ("twin_low", giants.PrimeKind.TWIN_LOW, ""),
        ("twin_high", giants.PrimeKind.TWIN_HIGH, ""),
    ]
    print(f"{'kind':<20}{'bitsize':>12}{'catsize':>10}")
    for name, kind, note in rows:
        value = giants.record_prime(kind)
        bits = core.to_int(blocks.bitsize(value))
        size = core.to_int(complexity.catsize(value))
        print(f"{name:<20}{bits:>12}{size:>10}{note}")
    return 0


def _cmd_enumerate(args):
    size = core.from_int(args.size)
    for value in complexity.enumerate_catsized(size):
        print(render_value(value, args.view, args.cap))
    return 0


def _cmd_dot(args):
    value = expr.eval_text(args.expression)
    text = dot.to_dot(dot.dag_export(value, binary=args.binary))
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as handle:
            handle.write(text)
    return 0


def _cmd_bench(args):
    if args.count < 1:
        raise ParseError("--count must be at least 1")
    total = 0
    x = BinTree.empty()
    for _ in range(args.count):
        x, calls = basic.successor_cost(x)
        total += calls
    print(f"inputs: {args.count}")
    print(f"total calls: {total}")
    print(f"average: {total / args.count:.4f}")
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "analyze": _cmd_analyze,
    "convert": _cmd_convert,
    "collatz": _cmd_collatz,
    "primes": _cmd_primes,
    "enumerate": _cmd_enumerate,
    "dot": _cmd_dot,
    "bench": _cmd_bench,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"catnum: parse error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"catnum: error: {exc}", file=sys.stderr)
        return 1
    except CatnumError as exc:
        print(f"catnum: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
