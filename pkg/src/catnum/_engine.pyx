# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic core for the binary-tree number representation.

This module holds the BinTree node type and the block-at-a-time
arithmetic used on it.  The algorithms are the same ones the generic
pure-Python layer implements for the other representations; they are
compiled here because the binary tree is the default computational
backend and has to stay fast on dense random operands.
"""

cimport cython

from catnum.errors import (
    DivisionByZero,
    EmptyDeconstruction,
    Underflow,
    ZeroPredecessor,
)

cdef Py_hash_t _HASH_EMPTY = 5381

# Values up to this bound carry their machine-integer value on the node,
# which turns comparisons between them into integer comparisons.
cdef long long _SMALL_CAP = <long long>1 << 62


# Instances are immutable and built bottom-up, so no reference cycles
# can form and the type opts out of the cycle collector.
@cython.no_gc
@cython.freelist(512)
cdef class BinTree:
    """Ordered rooted binary tree with empty leaves; encodes a natural number.

    Instances are immutable and may share subtrees freely.  Each node
    caches its parity bit (odd/even) and, lazily, its successor,
    predecessor and bitsize, so those operations stay cheap when the
    same subtree is revisited.
    """

    cdef readonly BinTree left
    cdef readonly BinTree right
    cdef readonly bint odd
    cdef BinTree _succ
    cdef BinTree _bits
    cdef Py_hash_t _hash
    cdef long long small

    def __init__(self):
        raise TypeError("use BinTree.empty() or BinTree.pair() to build values")

    @classmethod
    def empty(cls):
        """The canonical zero value."""
        return EMPTY

    @classmethod
    def pair(cls, BinTree x, BinTree y):
        """Combine two values into a non-empty one; inverse of unpair."""
        return _mk(x, y)

    def unpair(self):
        """Split a non-empty value into the pair it was built from."""
        if self is EMPTY:
            raise EmptyDeconstruction("cannot unpair the empty value")
        return (self.left, self.right)

    @property
    def is_empty(self):
        return self is EMPTY

    @property
    def is_odd(self):
        return self.odd

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not BinTree:
            return NotImplemented
        return _eq(self, <BinTree>other)

    def __repr__(self):
        if self is EMPTY:
            return "E"
        return "C %s %s" % (_paren_repr(self.left), _paren_repr(self.right))


cdef str _paren_repr(BinTree t):
    if t is EMPTY:
        return "E"
    return "(" + repr(t) + ")"


# Trees for values below this bound are interned in a lookup table, so
# the small trees used as run lengths are shared and keep their caches.
cdef long long _INTERN_LIMIT = 65536

cdef list _INTERNED = [None] * _INTERN_LIMIT


cdef BinTree _mk(BinTree l, BinTree r):
    cdef BinTree n
    cdef Py_hash_t h
    cdef long long i, j, small
    cdef object cached
    # The one-node is shared so identity tests against it stay valid.
    if l is EMPTY and r is EMPTY:
        return ONE
    small = -1
    i = l.small
    j = r.small
    if 0 <= i < 62 and j >= 0:
        if j & 1:
            if j <= (_SMALL_CAP >> (i + 1)):
                small = j << (i + 1)
        elif j + 1 <= (_SMALL_CAP >> (i + 1)):
            small = ((j + 1) << (i + 1)) - 1
    if 0 <= small < _INTERN_LIMIT:
        cached = _INTERNED[small]
        if cached is not None:
            return <BinTree>cached
    n = BinTree.__new__(BinTree)
    n.left = l
    n.right = r
    n.odd = not r.odd
    h = (l._hash * <Py_hash_t>1000003) ^ (r._hash * <Py_hash_t>2654435761) ^ <Py_hash_t>97531
    if h == -1:
        h = -2
    n._hash = h
    n.small = small
    if 0 <= small < _INTERN_LIMIT:
        _INTERNED[small] = n
    return n


cdef BinTree _from_small(long long v):
    # Canonical tree for a machine-sized value.
    cdef long long i, m
    cdef object cached
    if v == 0:
        return EMPTY
    if v < _INTERN_LIMIT:
        cached = _INTERNED[v]
        if cached is not None:
            return <BinTree>cached
    if v & 1:
        m = v + 1
        i = 0
        while not m & 1:
            m >>= 1
            i += 1
        return _mk(_from_small(i - 1), _from_small(m - 1))
    m = v
    i = 0
    while not m & 1:
        m >>= 1
        i += 1
    return _mk(_from_small(i - 1), _from_small(m))


cdef bint _eq(BinTree a, BinTree b):
    cdef list stack = [a, b]
    cdef BinTree x, y
    while stack:
        y = <BinTree>stack.pop()
        x = <BinTree>stack.pop()
        if x is y:
            continue
        if x.small != y.small:
            return False
        if x.small >= 0:
            # the value-to-tree map is a bijection, so equal small
            # values mean equal trees
            continue
        if x._hash != y._hash or x.odd != y.odd:
            return False
        stack.append(x.left)
        stack.append(y.left)
        stack.append(x.right)
        stack.append(y.right)
    return True


cdef BinTree EMPTY = BinTree.__new__(BinTree)
EMPTY.left = None
EMPTY.right = None
EMPTY.odd = False
EMPTY._hash = _HASH_EMPTY
EMPTY.small = 0

cdef BinTree ONE = BinTree.__new__(BinTree)
ONE.left = EMPTY
ONE.right = EMPTY
ONE.odd = True
ONE._hash = (_HASH_EMPTY * <Py_hash_t>1000003) ^ (_HASH_EMPTY * <Py_hash_t>2654435761) ^ <Py_hash_t>97531
ONE.small = 1
_INTERNED[1] = ONE


# --- successor / predecessor -------------------------------------------
# Both work on one run-length block at a time; the numbered cases mirror
# each other exactly, which is what makes them inverses.

cdef BinTree _s(BinTree z):
    cdef BinTree r, x, y, w, n
    r = z._succ
    if r is not None:
        return r
    if 0 <= z.small < _INTERN_LIMIT - 1:
        r = _from_small(z.small + 1)
        z._succ = r
        return r
    if z is EMPTY:                                   # case 1
        r = ONE
    else:
        x = z.left
        y = z.right
        if y is EMPTY:                               # case 2
            r = _mk(x, ONE)
        elif not z.odd:
            if x is EMPTY:                           # case 3
                r = _mk(_s(y.left), y.right)
            else:                                    # case 4
                r = _mk(EMPTY, _mk(_sp(x), y))
        else:
            w = y
            n = w.right
            if n is not EMPTY and w.left is EMPTY:   # case 5
                r = _mk(x, _mk(_s(n.left), n.right))
            else:                                    # case 6
                r = _mk(x, _mk(EMPTY, _mk(_sp(w.left), w.right)))
    z._succ = r
    return r


cdef BinTree _sp(BinTree k):
    cdef BinTree r, x, v, w
    if 0 < k.small < _INTERN_LIMIT:
        r = _from_small(k.small - 1)
        r._succ = k
        return r
    if k is ONE:                                     # case 1
        r = EMPTY
    else:
        x = k.left
        v = k.right
        if v is ONE:                                 # case 2
            r = _mk(x, EMPTY)
        elif not k.odd:
            w = v.right
            if w is not EMPTY and v.left is EMPTY:   # case 6
                r = _mk(x, _mk(_s(w.left), w.right))
            else:                                    # case 5
                r = _mk(x, _mk(EMPTY, _mk(_sp(v.left), v.right)))
        else:
            if v is not EMPTY and x is EMPTY:        # case 4
                r = _mk(_s(v.left), v.right)
            else:                                    # case 3
                r = _mk(EMPTY, _mk(_sp(x), v))
    r._succ = k
    return r


cdef BinTree _db(BinTree x):
    if x is EMPTY:
        return EMPTY
    if 0 <= x.small <= (_SMALL_CAP >> 1):
        return _from_small(x.small << 1)
    if x.odd:
        return _mk(EMPTY, x)
    return _mk(_s(x.left), x.right)


# --- shifts -------------------------------------------------------------

cdef BinTree _lsh(BinTree x, BinTree y):
    # 2^x * y: extend a block of 0s, or prefix an odd number with one.
    if x is EMPTY:
        return y
    if y is EMPTY:
        return EMPTY
    if 0 <= x.small < 62 and 0 <= y.small <= (_SMALL_CAP >> x.small):
        return _from_small(y.small << x.small)
    if y.odd:
        return _mk(_sp(x), y)
    return _mk(_add(x, y.left), y.right)


cdef BinTree _lsh1(BinTree x, BinTree k):
    # x-fold iterate of 2k+1, i.e. 2^x*(k+1)-1.
    return _sp(_lsh(x, _s(k)))


cdef BinTree _lsh2(BinTree x, BinTree k):
    # x-fold iterate of 2k+2, i.e. 2^x*(k+2)-2.
    return _sp(_sp(_lsh(x, _s(_s(k)))))


# --- addition / subtraction ---------------------------------------------
# Four parity cases each; the larger leading block is trimmed so blocks
# of equal size combine, then the tail recursion continues.

cdef BinTree _add(BinTree x, BinTree y):
    cdef BinTree a, as_, b, bs
    cdef int o
    if x is EMPTY:
        return y
    if y is EMPTY:
        return x
    if x.small >= 0 and y.small >= 0 and x.small + y.small <= _SMALL_CAP:
        return _from_small(x.small + y.small)
    a = x.left
    as_ = x.right
    b = y.left
    bs = y.right
    if not x.odd:
        if not y.odd:
            o = _cmp(a, b)
            if o == 0:
                return _lsh(_s(a), _add(as_, bs))
            if o > 0:
                return _lsh(_s(b), _add(_lsh(_sub(a, b), as_), bs))
            return _lsh(_s(a), _add(as_, _lsh(_sub(b, a), bs)))
        o = _cmp(a, b)
        if o == 0:
            return _lsh1(_s(a), _add(as_, bs))
        if o > 0:
            return _lsh1(_s(b), _add(_lsh(_sub(a, b), as_), bs))
        return _lsh1(_s(a), _add(as_, _lsh1(_sub(b, a), bs)))
    if not y.odd:
        return _add(y, x)
    o = _cmp(a, b)
    if o == 0:
        return _lsh2(_s(a), _add(as_, bs))
    if o > 0:
        return _lsh2(_s(b), _add(_lsh1(_sub(a, b), as_), bs))
    return _lsh2(_s(a), _add(as_, _lsh1(_sub(b, a), bs)))


cdef BinTree _sub(BinTree x, BinTree y):
    # Assumes x >= y; the public wrapper checks for underflow.
    cdef BinTree a, as_, b, bs
    cdef int o
    if y is EMPTY:
        return x
    if x.small >= 0 and y.small >= 0:
        return _from_small(x.small - y.small)
    a = x.left
    as_ = x.right
    b = y.left
    bs = y.right
    if not x.odd:
        if not y.odd:
            o = _cmp(a, b)
            if o == 0:
                return _lsh(_s(a), _sub(as_, bs))
            if o > 0:
                return _lsh(_s(b), _sub(_lsh(_sub(a, b), as_), bs))
            return _lsh(_s(a), _sub(as_, _lsh(_sub(b, a), bs)))
        # even minus odd
        o = _cmp(a, b)
        if o == 0:
            return _s(_lsh(_s(a), _sub1(as_, bs)))
        if o > 0:
            return _s(_lsh(_s(b), _sub1(_lsh(_sub(a, b), as_), bs)))
        return _s(_lsh(_s(a), _sub1(as_, _lsh1(_sub(b, a), bs))))
    if y.odd:
        o = _cmp(a, b)
        if o == 0:
            return _lsh(_s(a), _sub(as_, bs))
        if o > 0:
            return _lsh(_s(b), _sub(_lsh1(_sub(a, b), as_), bs))
        return _lsh(_s(a), _sub(as_, _lsh1(_sub(b, a), bs)))
    # odd minus even
    o = _cmp(a, b)
    if o == 0:
        return _lsh1(_s(a), _sub(as_, bs))
    if o > 0:
        return _lsh1(_s(b), _sub(_lsh1(_sub(a, b), as_), bs))
    return _lsh1(_s(a), _sub(as_, _lsh(_sub(b, a), bs)))


cdef BinTree _sub1(BinTree x, BinTree y):
    return _sp(_sub(x, y))


# --- bitsize / comparison ------------------------------------------------

cdef BinTree _bitsize(BinTree z):
    cdef BinTree r
    cdef list blocks
    cdef Py_ssize_t i
    cdef long long v, bl
    r = z._bits
    if r is not None:
        return r
    if z is EMPTY:
        z._bits = EMPTY
        return EMPTY
    if z.small >= 0:
        v = z.small
        bl = 0
        while v:
            v >>= 1
            bl += 1
        r = _from_small(bl)
        z._bits = r
        return r
    blocks = []
    r = z
    while r is not EMPTY:
        blocks.append(r.left)
        r = r.right
    r = EMPTY
    for i in range(len(blocks) - 1, -1, -1):
        r = _s(_add(<BinTree>blocks[i], r))
    z._bits = r
    return r


cdef int _cmp(BinTree x, BinTree y):
    cdef BinTree bx, by
    cdef list xs, ys
    cdef Py_ssize_t i, lx, ly
    cdef bint ones
    cdef int o
    if x.small >= 0:
        if y.small >= 0:
            if x.small < y.small:
                return -1
            if x.small > y.small:
                return 1
            return 0
        return -1
    if y.small >= 0:
        return 1
    if x is y:
        return 0
    # Both operands exceed the small cap here, so the bitsize recursion
    # bottoms out in the integer fast path above.
    bx = _bitsize(x)
    by = _bitsize(y)
    if bx is not by and not _eq(bx, by):
        return _cmp(bx, by)
    # Same bitsize: compare blocks big-endian; the first unequal block
    # decides, with the direction set by whether it is a 1s or 0s block.
    xs = []
    while x is not EMPTY:
        xs.append(x.left)
        x = x.right
    ys = []
    while y is not EMPTY:
        ys.append(y.left)
        y = y.right
    xs.reverse()
    ys.reverse()
    lx = len(xs)
    ly = len(ys)
    i = 0
    ones = True
    while True:
        if i >= lx and i >= ly:
            return 0
        o = _cmp(<BinTree>xs[i], <BinTree>ys[i])
        if o == 0:
            ones = not ones
            i += 1
            continue
        if ones:
            return o
        return -o


# --- multiplication -------------------------------------------------------

cdef BinTree _mul1(BinTree x, BinTree y):
    if x is EMPTY or y is EMPTY:
        return EMPTY
    if x is ONE:
        return y
    if x.small > 0 and y.small > 0 and x.small <= _SMALL_CAP // y.small:
        return _from_small(x.small * y.small)
    if not x.odd:
        # x = 2^(i+1) * j
        return _lsh(_s(x.left), _mul1(x.right, y))
    # x = 2^(i+1) * (j+1) - 1 with j even, so one subtraction handles the
    # whole 1-run and the recursion descends one block per call
    return _sub(_lsh(_s(x.left), _add(_mul1(x.right, y), y)), y)


cdef BinTree _mulsplit(BinTree x, BinTree y):
    # Split the multiplier's run list in half and recurse:
    # x = lo + 2^shift * hi, so x*y = lo*y + 2^shift * (hi*y).
    # This keeps each partial product out of the other's accumulator.
    cdef Py_ssize_t count = 0, i
    cdef BinTree t = x
    cdef BinTree hi, shift, lo
    while t is not EMPTY:
        count += 1
        t = t.right
    if count <= 8:
        return _mul1(x, y)
    hi = x
    for i in range(count // 2):
        hi = hi.right
    shift = _sub(_bitsize(x), _bitsize(hi))
    lo = _sub(x, _lsh(shift, hi))
    return _add(_lsh(shift, _mulsplit(hi, y)), _mulsplit(lo, y))


cdef BinTree _mul(BinTree x, BinTree y):
    # Recurse on the smaller operand.
    if _cmp(x, y) > 0:
        return _mulsplit(y, x)
    return _mulsplit(x, y)


# --- right shift / division ------------------------------------------------

cdef BinTree _exp2(BinTree x):
    if x is EMPTY:
        return ONE
    return _mk(_sp(x), ONE)


cdef BinTree _rsh(BinTree x, BinTree y):
    # floor(y / 2^x), consuming whole leading blocks.
    cdef BinTree a, b, a1
    cdef int o
    while True:
        if x is EMPTY:
            return y
        if y is EMPTY:
            return EMPTY
        a = y.left
        b = y.right
        a1 = _s(a)
        o = _cmp(x, a1)
        if o < 0:
            return _mk(_sub(a, x), b)
        if o == 0:
            return b
        x = _sub(x, a1)
        y = b


cdef BinTree _hf(BinTree x):
    # Exact half; callers only pass even values.
    if x is EMPTY:
        return EMPTY
    if x.left is EMPTY:
        return x.right
    return _mk(_sp(x.left), x.right)


cdef tuple _divstep(BinTree n, BinTree m):
    # Largest q with 2^q * m <= n; the bitsize gap overshoots by at
    # most one.  Caller guarantees m <= n.
    cdef BinTree q = _sub(_bitsize(n), _bitsize(m))
    cdef BinTree t = _lsh(q, m)
    if _cmp(t, n) > 0:
        q = _sp(q)
        t = _hf(t)
    return (q, _sub(n, t))


cdef tuple _div_rem(BinTree x, BinTree y):
    cdef BinTree q, qt, rm, z, r
    if _cmp(x, y) < 0:
        return (EMPTY, x)
    qt, rm = _divstep(x, y)
    z, r = _div_rem(rm, y)
    return (_add(_exp2(qt), z), r)


# --- Python-visible wrappers ------------------------------------------------

def successor(BinTree x):
    return _s(x)


def predecessor(BinTree x):
    if x is EMPTY:
        raise ZeroPredecessor("zero has no predecessor")
    return _sp(x)


def double(BinTree x):
    return _db(x)


def add(BinTree x, BinTree y):
    return _add(x, y)


def sub(BinTree x, BinTree y):
    if _cmp(x, y) < 0:
        raise Underflow("subtraction result would be negative")
    return _sub(x, y)


def compare(BinTree x, BinTree y):
    return _cmp(x, y)


def bitsize(BinTree x):
    return _bitsize(x)


def leftshift_by(BinTree x, BinTree y):
    return _lsh(x, y)


def leftshift_by1(BinTree x, BinTree y):
    return _lsh1(x, y)


def leftshift_by2(BinTree x, BinTree y):
    return _lsh2(x, y)


def mul(BinTree x, BinTree y):
    return _mul(x, y)


def rightshift_by(BinTree x, BinTree y):
    return _rsh(x, y)


def div_rem(BinTree x, BinTree y):
    if y is EMPTY:
        raise DivisionByZero("division by zero")
    return _div_rem(x, y)
