"""Shifts, addition, subtraction, ordering and bitsize.

All routines work one run-length block at a time: the leading block of
the larger operand is trimmed so equal-sized blocks combine, which keeps
the cost proportional to the number of blocks rather than the number of
binary digits.  Compiled binary trees dispatch to the native engine;
the generic code below serves the remaining representations.
"""

from enum import Enum

from catnum import _engine
from catnum._engine import BinTree
from catnum.basic import is_one, predecessor, successor
from catnum.core import from_list, to_list
from catnum.errors import Underflow

__all__ = [
    "Ordering",
    "leftshift_by",
    "leftshift_by1",
    "leftshift_by2",
    "add",
    "sub",
    "compare",
    "bitsize",
    "ilog2",
]


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1


def leftshift_by(x, y):
    """Multiply y by 2 raised to x."""
    if type(x) is BinTree:
        return _engine.leftshift_by(x, y)
    return _lsh(x, y)


def leftshift_by1(x, k):
    """Iterate v -> 2v+1 x times starting from k: 2^x*(k+1)-1."""
    if type(x) is BinTree:
        return _engine.leftshift_by1(x, k)
    return predecessor(_lsh(x, successor(k)))


def leftshift_by2(x, k):
    """Iterate v -> 2v+2 x times starting from k: 2^x*(k+2)-2."""
    if type(x) is BinTree:
        return _engine.leftshift_by2(x, k)
    return predecessor(predecessor(_lsh(x, successor(successor(k)))))


def add(x, y):
    if type(x) is BinTree:
        return _engine.add(x, y)
    return _add(x, y)


def sub(x, y):
    """Subtraction on naturals; refuses to go below zero."""
    if type(x) is BinTree:
        return _engine.sub(x, y)
    if _cmp(x, y) is Ordering.LT:
        raise Underflow("subtraction would be negative")
    return _sub(x, y)


def compare(x, y):
    if type(x) is BinTree:
        return _ORDERINGS[_engine.compare(x, y)]
    return _cmp(x, y)


def bitsize(x):
    """Number of binary digits; the empty value maps to itself."""
    if type(x) is BinTree:
        return _engine.bitsize(x)
    return _bitsize(x)


def ilog2(x):
    """Floor of the base-2 logarithm: predecessor of bitsize."""
    return predecessor(bitsize(x))


_ORDERINGS = {-1: Ordering.LT, 0: Ordering.EQ, 1: Ordering.GT}


def _lsh(x, y):
    if x.is_empty:
        return y
    if y.is_empty:
        return y
    cls = type(y)
    if y.is_odd:
        return cls.pair(predecessor(x), y)
    a, b = y.unpair()
    return cls.pair(_add(x, a), b)


def _lsh1(x, k):
    return predecessor(_lsh(x, successor(k)))


def _lsh2(x, k):
    return predecessor(predecessor(_lsh(x, successor(successor(k)))))


def _add(x, y):
    if x.is_empty:
        return y
    if y.is_empty:
        return x
    a, as_ = x.unpair()
    b, bs = y.unpair()
    if not x.is_odd:
        if not y.is_odd:
            o = _cmp(a, b)
            if o is Ordering.EQ:
                return _lsh(successor(a), _add(as_, bs))
            if o is Ordering.GT:
                return _lsh(successor(b), _add(_lsh(_sub(a, b), as_), bs))
            return _lsh(successor(a), _add(as_, _lsh(_sub(b, a), bs)))
        o = _cmp(a, b)
        if o is Ordering.EQ:
            return _lsh1(successor(a), _add(as_, bs))
        if o is Ordering.GT:
            return _lsh1(successor(b), _add(_lsh(_sub(a, b), as_), bs))
        return _lsh1(successor(a), _add(as_, _lsh1(_sub(b, a), bs)))
    if not y.is_odd:
        return _add(y, x)
    o = _cmp(a, b)
    if o is Ordering.EQ:
        return _lsh2(successor(a), _add(as_, bs))
    if o is Ordering.GT:
        return _lsh2(successor(b), _add(_lsh1(_sub(a, b), as_), bs))
    return _lsh2(successor(a), _add(as_, _lsh1(_sub(b, a), bs)))


def _sub(x, y):
    # Callers guarantee x >= y.
    if y.is_empty:
        return x
    a, as_ = x.unpair()
    b, bs = y.unpair()
    if not x.is_odd:
        if not y.is_odd:
            o = _cmp(a, b)
            if o is Ordering.EQ:
                return _lsh(successor(a), _sub(as_, bs))
            if o is Ordering.GT:
                return _lsh(successor(b), _sub(_lsh(_sub(a, b), as_), bs))
            return _lsh(successor(a), _sub(as_, _lsh(_sub(b, a), bs)))
        o = _cmp(a, b)
        if o is Ordering.EQ:
            return successor(_lsh(successor(a), _sub1(as_, bs)))
        if o is Ordering.GT:
            return successor(_lsh(successor(b), _sub1(_lsh(_sub(a, b), as_), bs)))
        return successor(_lsh(successor(a), _sub1(as_, _lsh1(_sub(b, a), bs))))
    if y.is_odd:
        o = _cmp(a, b)
        if o is Ordering.EQ:
            return _lsh(successor(a), _sub(as_, bs))
        if o is Ordering.GT:
            return _lsh(successor(b), _sub(_lsh1(_sub(a, b), as_), bs))
        return _lsh(successor(a), _sub(as_, _lsh1(_sub(b, a), bs)))
    o = _cmp(a, b)
    if o is Ordering.EQ:
        return _lsh1(successor(a), _sub(as_, bs))
    if o is Ordering.GT:
        return _lsh1(successor(b), _sub(_lsh1(_sub(a, b), as_), bs))
    return _lsh1(successor(a), _sub(as_, _lsh(_sub(b, a), bs)))


def _sub1(x, y):
    return predecessor(_sub(x, y))


def _bitsize(z):
    if z.is_empty:
        return z
    x, y = z.unpair()
    return successor(_add(x, _bitsize(y)))


def _rev(x):
    return from_list(list(reversed(to_list(x))), type(x))


def _cmp(x, y):
    if x.is_empty and y.is_empty:
        return Ordering.EQ
    if x.is_empty:
        return Ordering.LT
    if y.is_empty:
        return Ordering.GT
    # The 1-versus-larger shortcuts keep the bitsize recursion founded.
    if is_one(x) and is_one(predecessor(y)):
        return Ordering.LT
    if is_one(y) and is_one(predecessor(x)):
        return Ordering.GT
    bx = _bitsize(x)
    by = _bitsize(y)
    if bx != by:
        return _cmp(bx, by)
    return _comp_big_first(True, True, _rev(x), _rev(y))


def _comp_big_first(p, q, x, y):
    # Compares equal-bitsize values highest-order block first; the two
    # flags track the expected digit of the current leading blocks.
    if x.is_empty and y.is_empty:
        return Ordering.EQ
    if not p and not q:
        a, as_ = x.unpair()
        b, bs = y.unpair()
        o = _cmp(a, b)
        if o is Ordering.EQ:
            return _comp_big_first(True, True, as_, bs)
        return Ordering.GT if o is Ordering.LT else Ordering.LT
    if p and q:
        a, as_ = x.unpair()
        b, bs = y.unpair()
        o = _cmp(a, b)
        if o is Ordering.EQ:
            return _comp_big_first(False, False, as_, bs)
        return o
    if not p and q:
        return Ordering.LT
    return Ordering.GT
