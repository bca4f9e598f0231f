"""Record-holder primes and the Syracuse (Collatz) iterator.

Both case studies run on numbers whose binary expansions could never be
materialized; only their compressed representations are touched.
"""

from enum import Enum

from catnum import core
from catnum._engine import BinTree
from catnum.basic import double, exp2, half, predecessor, successor
from catnum.blocks import add, leftshift_by
from catnum.errors import EmptyDeconstruction, StepLimit

__all__ = [
    "PrimeKind",
    "record_prime",
    "cons",
    "decons",
    "hd",
    "tl",
    "syracuse",
    "nsyr",
]


class PrimeKind(Enum):
    MERSENNE = "mersenne"
    GENERALIZED_FERMAT = "generalized_fermat"
    CULLEN = "cullen"
    WOODALL = "woodall"
    PROTH = "proth"
    SOPHIE_GERMAIN = "sophie_germain"
    TWIN_LOW = "twin_low"
    TWIN_HIGH = "twin_high"


def record_prime(kind, cls=BinTree):
    """Compressed representation of a record-holder prime (2014 records).

    Each is within one step of a number with very few digit blocks, so
    the representations stay tiny despite millions of binary digits.
    """

    def f(n):
        return core.from_int(n, cls)

    if kind is PrimeKind.MERSENNE:
        return predecessor(exp2(f(57885161)))
    if kind is PrimeKind.GENERALIZED_FERMAT:
        return successor(leftshift_by(f(9167433), f(27653)))
    if kind is PrimeKind.CULLEN:
        x = f(6679881)
        return successor(leftshift_by(x, x))
    if kind is PrimeKind.WOODALL:
        x = f(3752948)
        return predecessor(leftshift_by(x, x))
    if kind is PrimeKind.PROTH:
        return successor(leftshift_by(f(13018586), f(19249)))
    if kind is PrimeKind.SOPHIE_GERMAIN:
        return predecessor(leftshift_by(f(666667), f(18543637900515)))
    if kind is PrimeKind.TWIN_LOW:
        return predecessor(leftshift_by(f(666669), f(3756801695685)))
    if kind is PrimeKind.TWIN_HIGH:
        return successor(leftshift_by(f(666669), f(3756801695685)))
    raise ValueError(f"unknown prime kind: {kind!r}")


def cons(x, y):
    """Encode the pair (x, y) as 2^x * (2y + 1)."""
    return leftshift_by(x, successor(double(y)))


def decons(a):
    """Inverse of cons: split a positive value into exponent and odd part."""
    if a.is_empty:
        raise EmptyDeconstruction("zero has no cons decomposition")
    if not a.is_odd:
        x, xs = a.unpair()
        return successor(x), half(predecessor(xs))
    return type(a).empty(), half(predecessor(a))


def hd(a):
    return decons(a)[0]


def tl(a):
    return decons(a)[1]


def syracuse(x):
    """One compressed Collatz step: the odd part of 3x+2, halved."""
    return tl(add(x, double(successor(x))))


def nsyr(x, max_steps=None):
    """Iterates of syracuse from x, ending with the zero it reaches.

    With max_steps set, at most that many iterates are produced; hitting
    the bound raises StepLimit carrying the iterates collected so far,
    distinguishable from natural termination.
    """
    out = [x]
    while not x.is_empty:
        if max_steps is not None and len(out) >= max_steps:
            raise StepLimit(out)
        x = syracuse(x)
        out.append(x)
    return out
