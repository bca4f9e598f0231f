"""Concrete number representations.

BinTree (compiled, the computation workhorse) is re-exported here next
to the pure-Python representations: multiway trees, balanced parenthesis
words, and a plain big-integer reference used as the testing oracle.
"""

from catnum._engine import BinTree
from catnum.errors import EmptyDeconstruction, MalformedWord

__all__ = [
    "BinTree",
    "MultiTree",
    "ParenWord",
    "NatRef",
    "nat_pair",
    "nat_unpair",
    "paren_pair",
    "paren_unpair",
]


def nat_pair(i, j):
    """Pairing bijection on plain integers: 2^(i+1)*j if j is odd, else
    2^(i+1)*(j+1)-1; always >= 1 and of parity opposite to j."""
    if i < 0 or j < 0:
        raise ValueError("nat_pair needs nonnegative arguments")
    if j & 1:
        return j << (i + 1)
    return ((j + 1) << (i + 1)) - 1


def nat_unpair(k):
    """Inverse of nat_pair, via the largest power of two dividing k or k+1."""
    if k <= 0:
        raise EmptyDeconstruction("cannot split zero")
    b = k & 1
    m = k + b
    i = (m & -m).bit_length() - 1
    return max(0, i - 1), (m >> i) - b


class NatRef:
    """Plain big-integer realization; the oracle the tree code is checked
    against.  Conversions into it are guarded by a bit cap."""

    __slots__ = ("_value",)
    is_bounded = True

    def __init__(self, value):
        value = int(value)
        if value < 0:
            raise ValueError("NatRef holds nonnegative integers")
        self._value = value

    @classmethod
    def empty(cls):
        return cls(0)

    @classmethod
    def pair(cls, i, j):
        return cls(nat_pair(i._value, j._value))

    def unpair(self):
        i, j = nat_unpair(self._value)
        return NatRef(i), NatRef(j)

    @property
    def value(self):
        return self._value

    @property
    def is_empty(self):
        return self._value == 0

    @property
    def is_odd(self):
        return bool(self._value & 1)

    def __eq__(self, other):
        if type(other) is not NatRef:
            return NotImplemented
        return self._value == other._value

    def __hash__(self):
        return hash(self._value)

    def __repr__(self):
        return f"NatRef({self._value})"


class MultiTree:
    """Ordered multiway tree with empty leaves.

    Children are held as a persistent linked chain so that attaching or
    detaching the first child is O(1); the parity of the encoded number
    is cached per node.
    """

    __slots__ = ("_children", "_odd", "_hash")

    def __init__(self):
        raise TypeError("use MultiTree.empty() or MultiTree.pair(x, y)")

    @classmethod
    def _make(cls, chain, odd):
        self = object.__new__(cls)
        self._children = chain
        self._odd = odd
        self._hash = None
        return self

    @classmethod
    def empty(cls):
        return _EMPTY_M

    @classmethod
    def pair(cls, x, y):
        if type(x) is not cls or type(y) is not cls:
            raise TypeError("MultiTree.pair needs MultiTree components")
        return cls._make((x, y._children), not y._odd)

    def unpair(self):
        if self._children is None:
            raise EmptyDeconstruction("cannot split an empty multiway tree")
        head, rest = self._children
        return head, MultiTree._make(rest, not self._odd)

    @property
    def children(self):
        out = []
        chain = self._children
        while chain is not None:
            out.append(chain[0])
            chain = chain[1]
        return out

    @property
    def is_empty(self):
        return self._children is None

    @property
    def is_odd(self):
        return self._odd

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not MultiTree:
            return NotImplemented
        if self._odd != other._odd:
            return False
        a, b = self._children, other._children
        while a is not None and b is not None:
            if a is b:
                return True
            if a[0] != b[0]:
                return False
            a, b = a[1], b[1]
        return a is None and b is None

    def __hash__(self):
        h = self._hash
        if h is None:
            h = 5381
            for child in self.children:
                h = (h * 1000003) ^ hash(child)
            h &= (1 << 61) - 1
            self._hash = h
        return h

    def __repr__(self):
        return "[" + ",".join(repr(c) for c in self.children) + "]"


_EMPTY_M = MultiTree._make(None, False)


class ParenWord:
    """Balanced parenthesis word with one enclosing pair.

    A self-delimiting variable-length code; pairing and splitting are
    linear scans over the text, so this representation is a codec, not a
    computation backend.
    """

    __slots__ = ("_word", "_odd")

    def __init__(self):
        raise TypeError("use ParenWord.from_text(), .empty() or .pair()")

    @classmethod
    def _make(cls, word, odd):
        self = object.__new__(cls)
        self._word = word
        self._odd = odd
        return self

    @classmethod
    def _from_word(cls, word):
        # Parity equals the parity of the number of top-level children.
        depth = 0
        children = 0
        for ch in word:
            if ch == "(":
                depth += 1
                if depth == 2:
                    children += 1
            else:
                depth -= 1
        return cls._make(word, children & 1 == 1)

    @classmethod
    def from_text(cls, text):
        if len(text) < 2:
            raise MalformedWord("word needs at least one parenthesis pair")
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth < 0:
                    raise MalformedWord(f"unbalanced ')' at index {i}")
                if depth == 0 and i != len(text) - 1:
                    raise MalformedWord(f"trailing input after index {i}")
            else:
                raise MalformedWord(f"unexpected character {ch!r} at index {i}")
        if depth != 0:
            raise MalformedWord("unbalanced word: missing closers")
        return cls._from_word(text)

    @classmethod
    def empty(cls):
        return _EMPTY_P

    @classmethod
    def pair(cls, x, y):
        if type(x) is not cls or type(y) is not cls:
            raise TypeError("ParenWord.pair needs ParenWord components")
        yw = y._word
        if not yw.startswith("("):
            raise MalformedWord("second component must open with '('")
        return cls._make("(" + x._word + yw[1:], not y._odd)

    def unpair(self):
        w = self._word
        if w == "()":
            raise EmptyDeconstruction("cannot split the empty word")
        # Scan past the opening parenthesis until the running balance
        # first returns to 1; the first component ends there.
        ps = w[1:]
        k = 0
        for idx, ch in enumerate(ps):
            if ch == "(":
                k += 1
            elif k == 1:
                return (
                    ParenWord._from_word(ps[: idx + 1]),
                    ParenWord._make("(" + ps[idx + 1 :], not self._odd),
                )
            else:
                k -= 1
        raise MalformedWord("unbalanced word")

    @property
    def text(self):
        return self._word

    @property
    def is_empty(self):
        return self._word == "()"

    @property
    def is_odd(self):
        return self._odd

    def __eq__(self, other):
        if type(other) is not ParenWord:
            return NotImplemented
        return self._word == other._word

    def __hash__(self):
        return hash(self._word)

    def __repr__(self):
        return f"ParenWord({self._word!r})"


_EMPTY_P = ParenWord._make("()", False)


def paren_pair(x, y):
    """Join two parenthesis words into one; inverse of paren_unpair."""
    return ParenWord.pair(x, y)


def paren_unpair(z):
    """Split a non-trivial parenthesis word into its two components."""
    return z.unpair()
