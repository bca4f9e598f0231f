"""Multiplication, squaring, powers, right shift and division."""

from catnum import _engine
from catnum._engine import BinTree
from catnum.basic import double, exp2, one, predecessor, successor
from catnum.blocks import Ordering, add, compare, leftshift_by, sub
from catnum.errors import DivisionByZero

__all__ = [
    "mul",
    "square",
    "pow",
    "rightshift_by",
    "div_rem",
    "divide",
    "remainder",
]


def mul(x, y):
    if type(x) is BinTree:
        return _engine.mul(x, y)
    if compare(x, y) is Ordering.GT:
        return _mul1(y, x)
    return _mul1(x, y)


def square(x):
    if type(x) is BinTree:
        return _engine.mul(x, x)
    return _mul1(x, x)


def pow(a, b):
    """Power by squaring; an even base folds its zero-block directly."""
    cls = type(a)
    if b.is_empty:
        return one(cls)
    if a.is_empty:
        return a
    if not a.is_odd:
        x, xs = a.unpair()
        return cls.pair(predecessor(mul(successor(x), b)), pow(xs, b))
    if not b.is_odd:
        y, ys = b.unpair()
        return pow(_super_square(y, a), ys)
    return mul(a, pow(a, predecessor(b)))


def rightshift_by(x, y):
    """Floor-divide y by 2 raised to x, consuming whole blocks."""
    if type(x) is BinTree:
        return _engine.rightshift_by(x, y)
    while True:
        if x.is_empty or y.is_empty:
            return y
        a, b = y.unpair()
        a1 = successor(a)
        o = compare(x, a1)
        if o is Ordering.LT:
            return type(y).pair(sub(a, x), b)
        if o is Ordering.EQ:
            return b
        x, y = sub(x, a1), b


def div_rem(x, y):
    """Quotient and remainder with x = q*y + r, 0 <= r < y."""
    if y.is_empty:
        raise DivisionByZero("division by zero")
    if type(x) is BinTree:
        return _engine.div_rem(x, y)
    return _div_and_rem(x, y)


def divide(x, y):
    return div_rem(x, y)[0]


def remainder(x, y):
    return div_rem(x, y)[1]


def _mul1(x, y):
    if x.is_empty:
        return x
    if not x.is_odd:
        a, b = x.unpair()
        return leftshift_by(successor(a), _mul1(b, y))
    return add(y, _mul1(predecessor(x), y))


def _super_square(k, x):
    if k.is_empty:
        return square(x)
    return square(_super_square(predecessor(k), x))


def _div_and_rem(x, y):
    if compare(x, y) is Ordering.LT:
        return type(x).empty(), x
    qt, rm = _divstep(x, y)
    z, r = _div_and_rem(rm, y)
    return add(exp2(qt), z), r


def _divstep(n, m):
    q = _try_to_double(n, m, type(n).empty())
    return q, sub(n, leftshift_by(q, m))


def _try_to_double(x, y, k):
    # Doubles y while it stays at most x; returns the step count less one.
    while compare(x, y) is not Ordering.LT:
        y = double(y)
        k = successor(k)
    return predecessor(k)
