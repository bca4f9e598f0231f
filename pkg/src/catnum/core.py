"""Generic structural layer shared by every number representation.

A value is either the empty object (zero) or an ordered pair of two
values.  Every representation in this library realizes that single
contract, so the structural utilities here (list view, parenthesis
rendering, conversion, integer bridging) are written once against it.
"""

from typing import Protocol

from catnum._engine import BinTree
from catnum.errors import MalformedWord, SizeGuard

# Refuse to materialize plain integers above this many binary digits.
DEFAULT_CAP = 10 ** 6


class CatValue(Protocol):
    """The contract every representation implements."""

    @classmethod
    def empty(cls) -> "CatValue": ...

    @classmethod
    def pair(cls, x: "CatValue", y: "CatValue") -> "CatValue": ...

    def unpair(self) -> tuple["CatValue", "CatValue"]: ...

    @property
    def is_empty(self) -> bool: ...

    @property
    def is_odd(self) -> bool: ...


def fold_pairs(x, on_empty, on_pair):
    """Bottom-up replacement of every node of x.

    on_empty(v) produces the result for an empty node, on_pair(v, a, b,
    ra, rb) combines the results ra, rb of the components a, b.  Shared
    subtrees are memoized, and no recursion is used, so arbitrarily deep
    values are safe.
    """
    done = {}
    stack = [[x, None, None]]
    while stack:
        frame = stack[-1]
        v = frame[0]
        if v in done:
            stack.pop()
            continue
        if v.is_empty:
            done[v] = on_empty(v)
            stack.pop()
            continue
        if frame[1] is None:
            frame[1], frame[2] = v.unpair()
        a, b = frame[1], frame[2]
        if a not in done:
            stack.append([a, None, None])
            continue
        if b not in done:
            stack.append([b, None, None])
            continue
        done[v] = on_pair(v, a, b, done[a], done[b])
        stack.pop()
    return done[x]


def to_list(x):
    """Block view of x: repeatedly split off the first component."""
    out = []
    while not x.is_empty:
        h, x = x.unpair()
        out.append(h)
    return out


def from_list(blocks, cls=BinTree):
    """Right fold of pair over the sequence, ending in the empty value."""
    acc = cls.empty()
    for b in reversed(blocks):
        acc = cls.pair(b, acc)
    return acc


def cat_show(x):
    """Render x as a balanced parenthesis word; "()" for the empty value."""
    out = []
    stack = [x]
    while stack:
        v = stack.pop()
        if v is _CLOSE:
            out.append(")")
            continue
        out.append("(")
        stack.append(_CLOSE)
        for child in reversed(to_list(v)):
            stack.append(child)
    return "".join(out)


_CLOSE = object()


def parse_paren(text, cls=BinTree):
    """Inverse of cat_show; builds a value of the requested representation."""
    if not text:
        raise MalformedWord("empty input")
    stack = []
    for i, ch in enumerate(text):
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if not stack:
                raise MalformedWord(f"unbalanced ')' at index {i}")
            children = stack.pop()
            value = from_list(children, cls)
            if stack:
                stack[-1].append(value)
            elif i != len(text) - 1:
                raise MalformedWord(f"trailing input after index {i}")
            else:
                return value
        else:
            raise MalformedWord(f"unexpected character {ch!r} at index {i}")
    raise MalformedWord("unbalanced word: missing closers")


def to_int(x, cap=DEFAULT_CAP):
    """Materialize x as a plain integer, refusing beyond cap binary digits."""

    def on_pair(v, a, b, i, j):
        if i >= cap or i + j.bit_length() >= cap:
            raise SizeGuard(f"value exceeds the {cap}-bit conversion cap")
        if j & 1:
            return j << (i + 1)
        return ((j + 1) << (i + 1)) - 1

    return fold_pairs(x, lambda v: 0, on_pair)


def from_int(value, cls=BinTree):
    """Build the canonical representation of a nonnegative integer."""
    if value < 0:
        raise ValueError("negative numbers have no representation")
    if getattr(cls, "is_bounded", False):
        return cls(value)
    if value == 0:
        return cls.empty()
    blocks = []
    m = value
    while m:
        if m & 1:
            run = ((m + 1) & -(m + 1)).bit_length() - 1
        else:
            run = (m & -m).bit_length() - 1
        blocks.append(run - 1)
        m >>= run
    return from_list([from_int(b, cls) for b in blocks], cls)


def convert(x, cls, cap=DEFAULT_CAP):
    """Structure-preserving image of x in another representation.

    Converting to a representation that materializes plain integers is
    guarded by the bit cap, since tetration-sized values must never be
    expanded.
    """
    if type(x) is cls:
        return x
    if getattr(cls, "is_bounded", False):
        return cls(to_int(x, cap))
    empty = cls.empty()
    return fold_pairs(
        x,
        lambda v: empty,
        lambda v, a, b, ra, rb: cls.pair(ra, rb),
    )
