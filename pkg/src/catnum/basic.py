"""Parity, one, successor/predecessor, doubling and exponents of two.

Successor and predecessor rewrite one run of identical binary digits at
a time; averaged over consecutive inputs they cost a small constant
number of recursive calls.  Values of the compiled binary-tree
representation are dispatched to the native implementation; every other
representation runs the generic code below.
"""

from enum import Enum

from catnum import _engine
from catnum._engine import BinTree
from catnum.errors import NotPowerOfTwo, OddHalf, ZeroPredecessor

__all__ = [
    "Parity",
    "parity",
    "one",
    "is_one",
    "successor",
    "predecessor",
    "successor_cost",
    "double",
    "half",
    "exp2",
    "log2",
]


class Parity(Enum):
    EVEN = 0
    ODD = 1


def parity(x):
    """Parity of the encoded number; O(1) through the per-node cache."""
    return Parity.ODD if x.is_odd else Parity.EVEN


def one(cls=BinTree):
    """The value encoding 1: a pair of two empty values."""
    e = cls.empty()
    return cls.pair(e, e)


def is_one(x):
    if x.is_empty:
        return False
    a, b = x.unpair()
    return a.is_empty and b.is_empty


def successor(x):
    if type(x) is BinTree:
        return _engine.successor(x)
    return _s(x, None)


def predecessor(x):
    if x.is_empty:
        raise ZeroPredecessor("zero has no predecessor")
    if type(x) is BinTree:
        return _engine.predecessor(x)
    return _sp(x, None)


def successor_cost(x):
    """Generic successor plus the number of recursive calls it made.

    Counts every entry into the successor/predecessor pair, including
    the initial one; used by the average-cost benchmark.
    """
    tally = [0]
    return _s(x, tally), tally[0]


def _s(z, tally):
    # Case numbers follow the six mutually mirrored rewrite rules.
    if tally is not None:
        tally[0] += 1
    cls = type(z)
    e = cls.empty()
    if z.is_empty:
        return cls.pair(e, e)                                       # 1
    x, y = z.unpair()
    if y.is_empty:
        return cls.pair(x, cls.pair(e, e))                          # 2
    if not z.is_odd:
        if x.is_empty:
            a, b = y.unpair()
            return cls.pair(_s(a, tally), b)                        # 3
        return cls.pair(e, cls.pair(_sp(x, tally), y))              # 4
    m, n = y.unpair()
    if not n.is_empty and m.is_empty:
        p, q = n.unpair()
        return cls.pair(x, cls.pair(_s(p, tally), q))               # 5
    return cls.pair(x, cls.pair(e, cls.pair(_sp(m, tally), n)))     # 6


def _sp(k, tally):
    if tally is not None:
        tally[0] += 1
    cls = type(k)
    e = cls.empty()
    x, v = k.unpair()
    if x.is_empty and v.is_empty:
        return e                                                    # 1
    if is_one(v):
        return cls.pair(x, e)                                       # 2
    if not k.is_odd:
        r, w = v.unpair()
        if not w.is_empty and r.is_empty:
            p, q = w.unpair()
            return cls.pair(x, cls.pair(_s(p, tally), q))           # 6
        return cls.pair(x, cls.pair(e, cls.pair(_sp(r, tally), w))) # 5
    if not v.is_empty and x.is_empty:
        p, q = v.unpair()
        return cls.pair(_s(p, tally), q)                            # 4
    return cls.pair(e, cls.pair(_sp(x, tally), v))                  # 3


def double(x):
    if type(x) is BinTree:
        return _engine.double(x)
    if x.is_empty:
        return x
    cls = type(x)
    if x.is_odd:
        return cls.pair(cls.empty(), x)
    a, b = x.unpair()
    return cls.pair(successor(a), b)


def half(x):
    """Exact halving; defined on even values only."""
    if x.is_odd:
        raise OddHalf("cannot halve an odd value exactly")
    if x.is_empty:
        return x
    a, b = x.unpair()
    if a.is_empty:
        return b
    return type(x).pair(predecessor(a), b)


def exp2(x):
    """2 raised to the encoded number; a single pair construction."""
    cls = type(x)
    e = cls.empty()
    if x.is_empty:
        return cls.pair(e, e)
    return cls.pair(predecessor(x), cls.pair(e, e))


def log2(x):
    """Left inverse of exp2; defined on exact powers of two only."""
    if x.is_empty:
        raise NotPowerOfTwo("zero is not a power of two")
    a, b = x.unpair()
    if b.is_empty:
        if a.is_empty:
            return type(x).empty()
        raise NotPowerOfTwo("value is not a power of two")
    if is_one(b):
        return successor(a)
    raise NotPowerOfTwo("value is not a power of two")
