"""Tiny prefix-call expression language over the compressed arithmetic.

Grammar: a decimal literal, or name(arg, ...) with a fixed arity per
registered operation.  Everything evaluates on the compiled binary-tree
representation.
"""

import re

from catnum import advanced, basic, blocks, complexity, core, giants
from catnum.errors import ArityError, LiteralTooLarge, ParseError, UnknownName

__all__ = ["Literal", "Call", "parse_expr", "eval_expr", "eval_text", "OPERATIONS"]

DEFAULT_LITERAL_CAP = 2 ** 64


class Literal:
    __slots__ = ("value", "position")

    def __init__(self, value, position):
        self.value = value
        self.position = position

    def __repr__(self):
        return f"Literal({self.value})"


class Call:
    __slots__ = ("name", "args", "position")

    def __init__(self, name, args, position):
        self.name = name
        self.args = args
        self.position = position

    def __repr__(self):
        return f"Call({self.name}, {self.args})"


def _prime(kind):
    return lambda: giants.record_prime(kind)


OPERATIONS = {
    "successor": (basic.successor, 1),
    "predecessor": (basic.predecessor, 1),
    "add": (blocks.add, 2),
    "sub": (blocks.sub, 2),
    "mul": (advanced.mul, 2),
    "divide": (advanced.divide, 2),
    "remainder": (advanced.remainder, 2),
    "pow": (advanced.pow, 2),
    "exp2": (basic.exp2, 1),
    "log2": (basic.log2, 1),
    "double": (basic.double, 1),
    "half": (basic.half, 1),
    "leftshift": (blocks.leftshift_by, 2),
    "rightshift": (advanced.rightshift_by, 2),
    "bitsize": (blocks.bitsize, 1),
    "ilog2": (blocks.ilog2, 1),
    "catsize": (complexity.catsize, 1),
    "dual": (complexity.dual, 1),
    "best_case": (complexity.best_case, 1),
    "tower": (complexity.best_case, 1),
    "worst_case": (complexity.worst_case, 1),
    "syracuse": (giants.syracuse, 1),
    "mersenne": (_prime(giants.PrimeKind.MERSENNE), 0),
    "generalized_fermat": (_prime(giants.PrimeKind.GENERALIZED_FERMAT), 0),
    "cullen": (_prime(giants.PrimeKind.CULLEN), 0),
    "woodall": (_prime(giants.PrimeKind.WOODALL), 0),
    "proth": (_prime(giants.PrimeKind.PROTH), 0),
    "sophie_germain": (_prime(giants.PrimeKind.SOPHIE_GERMAIN), 0),
    "twin_low": (_prime(giants.PrimeKind.TWIN_LOW), 0),
    "twin_high": (_prime(giants.PrimeKind.TWIN_HIGH), 0),
}

_TOKEN = re.compile(r"\d+|[A-Za-z_][A-Za-z_0-9]*|[(),]")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(), pos))
        pos = m.end()
    return tokens


def parse_expr(text, literal_cap=DEFAULT_LITERAL_CAP):
    """Parse text into an arity-checked syntax tree."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0)
    node, index = _parse(tokens, 0, literal_cap)
    if index != len(tokens):
        raise ParseError("trailing input", tokens[index][1])
    return node


def _parse(tokens, index, literal_cap):
    if index >= len(tokens):
        last = tokens[-1][1] if tokens else 0
        raise ParseError("unexpected end of input", last)
    tok, pos = tokens[index]
    if tok.isdigit():
        value = int(tok)
        if value > literal_cap:
            raise LiteralTooLarge(f"literal exceeds the cap {literal_cap}", pos)
        return Literal(value, pos), index + 1
    if tok in "(),":
        raise ParseError(f"expected a name or number, got {tok!r}", pos)
    name = tok
    if name not in OPERATIONS:
        raise UnknownName(f"unknown operation {name!r}", pos)
    arity = OPERATIONS[name][1]
    index += 1
    if index >= len(tokens) or tokens[index][0] != "(":
        raise ParseError(f"expected '(' after {name!r}", pos)
    index += 1
    args = []
    if index < len(tokens) and tokens[index][0] == ")":
        index += 1
    else:
        while True:
            arg, index = _parse(tokens, index, literal_cap)
            args.append(arg)
            if index >= len(tokens):
                raise ParseError("unexpected end of input", tokens[-1][1])
            tok, tpos = tokens[index]
            index += 1
            if tok == ")":
                break
            if tok != ",":
                raise ParseError(f"expected ',' or ')', got {tok!r}", tpos)
    if len(args) != arity:
        raise ArityError(
            f"{name!r} takes {arity} argument(s), got {len(args)}", pos
        )
    return Call(name, args, pos), index


def eval_expr(node):
    """Evaluate a syntax tree to a compiled binary-tree value."""
    if isinstance(node, Literal):
        return core.from_int(node.value)
    fn = OPERATIONS[node.name][0]
    return fn(*[eval_expr(arg) for arg in node.args])


def eval_text(text, literal_cap=DEFAULT_LITERAL_CAP):
    """Parse and evaluate in one step."""
    return eval_expr(parse_expr(text, literal_cap))
