"""Representation-size measures, enumeration, extreme cases and duality.

The node count of a value (its representation complexity) is bounded by
its bitsize, so even tetration-sized numbers stay analyzable.
"""

from functools import cmp_to_key

from catnum import _engine, core
from catnum._engine import BinTree
from catnum.basic import predecessor
from catnum.errors import CapExceeded

__all__ = [
    "catsize",
    "catalan_number",
    "enumerate_catsized",
    "iterated",
    "best_case",
    "worst_case",
    "dual",
    "max_tdepth",
    "max_mdepth",
]

# Enumerating all values of a given node count grows as the Catalan
# numbers; refuse beyond this size by default.
DEFAULT_ENUM_CAP = 10


def catsize(x):
    """Number of pair nodes, as a value of the same representation."""
    count = core.fold_pairs(x, lambda v: 0, lambda v, a, b, ra, rb: 1 + ra + rb)
    return core.from_int(count, type(x))


def catalan_number(k):
    """The k-th Catalan number, by the exact integer recurrence."""
    if k < 0:
        raise ValueError("index must be nonnegative")
    c = 1
    for i in range(1, k + 1):
        c = (2 * (2 * i - 1) * c) // (i + 1)
    return c


def enumerate_catsized(a, cap=DEFAULT_ENUM_CAP):
    """All values with exactly catsize a, in increasing numeric order.

    There are catalan_number(a) of them; sizes above the cap are refused
    since the census grows exponentially.
    """
    k = core.to_int(a)
    if k > cap:
        raise CapExceeded(f"size {k} is beyond the enumeration cap {cap}")
    cls = type(a)
    shapes = _all_shapes(k)
    shapes.sort(key=cmp_to_key(_engine.compare))
    if cls is BinTree:
        return shapes
    return [core.convert(x, cls) for x in shapes]


def _all_shapes(k):
    # All binary trees with exactly k pair nodes, smallest sizes first.
    table = [[BinTree.empty()]]
    for m in range(1, k + 1):
        row = []
        for i in range(m):
            for left in table[i]:
                for right in table[m - 1 - i]:
                    row.append(BinTree.pair(left, right))
        table.append(row)
    return table[k]


def iterated(f, k, x):
    """Apply f to x as many times as the number k encodes."""
    while not k.is_empty:
        x = f(x)
        k = predecessor(k)
    return x


def best_case(k):
    """The most compressible value of its bitsize: a tower of exponents
    k levels tall, less one.  Its node count is exactly k."""
    cls = type(k)
    e = cls.empty()
    return iterated(lambda v: cls.pair(v, e), k, e)


def worst_case(k):
    """The least compressible shape: a right-leaning chain of k nodes,
    whose bitsize equals its node count."""
    cls = type(k)
    e = cls.empty()
    return iterated(lambda v: cls.pair(e, v), k, e)


def dual(x):
    """Swap the two components of every pair, recursively; an involution
    exchanging wide trees with tall ones."""
    cls = type(x)
    e = cls.empty()
    return core.fold_pairs(
        x,
        lambda v: e,
        lambda v, a, b, ra, rb: cls.pair(rb, ra),
    )


def max_tdepth(x):
    """Longest root-to-leaf path under the binary pairing view."""
    depth = core.fold_pairs(
        x,
        lambda v: 0,
        lambda v, a, b, ra, rb: 1 + max(ra, rb),
    )
    return core.from_int(depth, type(x))


def max_mdepth(x):
    """Longest root-to-leaf path under the multiway (children) view."""

    def on_pair(v, a, b, ra, rb):
        # A pair's children are its first component plus the children of
        # its second, so the second component's depth carries across.
        if b.is_empty:
            return 1 + ra
        return max(1 + ra, rb)

    depth = core.fold_pairs(x, lambda v: 0, on_pair)
    return core.from_int(depth, type(x))
