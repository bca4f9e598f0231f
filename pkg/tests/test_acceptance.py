"""End-to-end acceptance checks.

Each test covers one release criterion, asserts the stated tolerance,
and prints a single pass line with the elapsed time.  Run with -rP (the
default addopts) to see the lines for passing tests.
"""

import random
import time

import pytest

from catnum import (
    BinTree,
    MultiTree,
    NatRef,
    Ordering,
    ParenWord,
    advanced,
    basic,
    blocks,
    complexity,
    core,
    giants,
)
from catnum.giants import PrimeKind
from catnum.instances import nat_pair, nat_unpair

t = core.from_int
n = core.to_int


class _Timer:
    def __init__(self, budget):
        self.budget = budget

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.monotonic() - self.start
        return False

    def report(self, number, label):
        assert self.elapsed < self.budget, (
            f"criterion {number} exceeded budget: "
            f"{self.elapsed:.1f}s >= {self.budget}s"
        )
        print(f"criterion {number} PASS: {label} ({self.elapsed:.1f}s)")


def _check_ops(a, b, xa, xb):
    assert n(advanced.mul(xa, xb)) == a * b
    order = blocks.compare(xa, xb)
    assert order.value == (a > b) - (a < b)
    if order is not Ordering.LT:
        assert n(blocks.sub(xa, xb)) == a - b
    assert n(blocks.add(xa, xb)) == a + b
    if b:
        q, r = advanced.div_rem(xa, xb)
        assert (n(q), n(r)) == (a // b, a % b)


def test_criterion_1_oracle_equivalence():
    with _Timer(60) as timer:
        small = [t(k) for k in range(256)]
        for a in range(256):
            for b in range(256):
                assert n(advanced.mul(small[a], small[b])) == a * b
                assert n(blocks.add(small[a], small[b])) == a + b
                order = blocks.compare(small[a], small[b])
                assert order.value == (a > b) - (a < b)
                if a >= b:
                    assert n(blocks.sub(small[a], small[b])) == a - b
                if b:
                    q, r = advanced.div_rem(small[a], small[b])
                    assert (n(q), n(r)) == (a // b, a % b)
        random.seed(20140817)
        for _ in range(10 ** 4):
            a = random.getrandbits(random.randint(1, 256))
            b = random.getrandbits(random.randint(1, 256))
            _check_ops(a, b, t(a), t(b))
    timer.report(1, "oracle equivalence, grid 256x256 plus 10^4 random pairs")


def test_criterion_2_golden_values():
    with _Timer(30) as timer:
        unpair_table = [nat_unpair(k) for k in range(1, 11)]
        assert unpair_table == [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2),
                                (0, 3), (2, 0), (2, 1), (0, 4), (0, 5)]
        assert nat_pair(100, 200) == 509595541291748219401674688561151
        assert [n(v) for v in core.to_list(t(2014))] == [0, 3, 0, 4]
        assert core.cat_show(t(12345)) == "(()(())(()())(()()())(()))"
        for k in range(16):
            assert n(basic.exp2(t(k))) == 2 ** k
            assert n(basic.log2(t(2 ** k))) == k
        for k in range(16):
            assert n(blocks.add(t(10), t(k))) == 10 + k
            assert n(blocks.sub(t(15), t(k))) == 15 - k
        assert (n(advanced.divide(t(26), t(3))),
                n(advanced.remainder(t(26), t(3)))) == (8, 2)
        assert n(blocks.bitsize(advanced.pow(t(10), t(100)))) == 333
        assert core.cat_show(advanced.pow(t(32), t(10 ** 7))) == (
            "(((()(()))((())())((()))()()()((())())()())())"
        )
        assert [n(complexity.catsize(t(k)))
                for k in (0, 100, 1000, 10000)] == [0, 7, 9, 13]
        assert [n(complexity.catsize(t(2 ** e)))
                for e in (16, 32, 64, 256)] == [5, 6, 6, 6]
        assert [complexity.catalan_number(k) for k in range(15)] == [
            1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862,
            16796, 58786, 208012, 742900, 2674440]
        assert [n(v) for v in complexity.enumerate_catsized(t(4))] == [
            8, 9, 10, 11, 12, 13, 14, 16, 30, 31, 63, 127, 255, 65535]
        best = complexity.best_case(t(5))
        worst = complexity.worst_case(t(5))
        assert n(blocks.bitsize(best)) == 65536
        assert n(complexity.catsize(best)) == 5
        assert n(blocks.bitsize(worst)) == 5
        assert n(complexity.catsize(worst)) == 5
        assert [n(complexity.dual(t(k))) for k in range(21)] == [
            0, 1, 3, 2, 4, 15, 7, 6, 12, 31, 65535, 16, 8, 255,
            127, 5, 11, 8191, 4294967295, 32, 65536]
        census = {order: [] for order in Ordering}
        for k in range(32):
            census[blocks.compare(t(k), complexity.dual(t(k)))].append(k)
        assert census[Ordering.EQ] == [0, 1, 4, 24]
        assert census[Ordering.GT] == [3, 7, 12, 15, 16, 31]
    timer.report(2, "golden values, exact")


def test_criterion_3_giant_primes():
    with _Timer(10) as timer:
        sizes = {
            PrimeKind.MERSENNE: (57885161, 25),
            PrimeKind.GENERALIZED_FERMAT: (9167448, 37),
            PrimeKind.CULLEN: (6679904, 46),
            PrimeKind.WOODALL: (3752970, 37),
            PrimeKind.SOPHIE_GERMAIN: (666712, 62),
            PrimeKind.TWIN_LOW: (666711, 59),
            PrimeKind.TWIN_HIGH: (666711, 60),
        }
        for kind, (bits, size) in sizes.items():
            value = giants.record_prime(kind)
            assert n(blocks.bitsize(value)) == bits, kind
            assert n(complexity.catsize(value)) == size, kind
        mersenne = giants.record_prime(PrimeKind.MERSENNE)
        assert core.cat_show(mersenne) == (
            "(((()())()()((()))((())())()()(())(())(()())()(())))"
        )
        term1 = blocks.sub(basic.exp2(basic.exp2(t(12345))),
                           basic.exp2(t(6789)))
        term2 = blocks.add(basic.exp2(basic.exp2(t(123))),
                           basic.exp2(t(456789)))
        nested = blocks.bitsize(blocks.bitsize(advanced.mul(term1, term2)))
        assert n(nested) == 12346
    timer.report(3, "giant prime sizes and renderings")


def test_criterion_4_collatz():
    with _Timer(300) as timer:
        expected = [2014, 755, 1133, 1700, 1275, 1913, 2870, 1076, 807, 1211,
                    1817, 2726, 1022, 383, 575, 863, 1295, 1943, 2915, 4373,
                    6560, 4920, 3690, 86, 32, 24, 18, 3, 5, 8, 6, 2, 0]
        assert [n(v) for v in giants.nsyr(t(2014))] == expected
        x = complexity.best_case(t(100))
        sizes = []
        for _ in range(100):
            sizes.append(n(complexity.catsize(x)))
            x = giants.syracuse(x)
        assert sizes[:5] == [100, 199, 297, 298, 300]
        assert sizes[-3:] == [434, 445, 439]
    timer.report(4, "hailstone sequences on plain and tower starts")


@pytest.mark.slow
def test_criterion_4_collatz_twin_towers():
    with _Timer(600) as timer:
        tower = blocks.add(complexity.best_case(t(101)),
                           complexity.best_case(t(103)))
        first = n(complexity.catsize(tower))
        second = n(complexity.catsize(giants.syracuse(tower)))
        assert [first, second] == [10206, 10500]
    timer.report(4, "slow twin-tower hailstone step")


def test_criterion_5_duality():
    with _Timer(120) as timer:
        for k in range(10 ** 4 + 1):
            x = t(k)
            assert complexity.dual(complexity.dual(x)) == x
        big = t(10000)
        assert complexity.dual(complexity.best_case(big)) == complexity.worst_case(big)
        smaller = equal = 0
        for k in range(2 ** 16):
            order = blocks.compare(complexity.dual(t(k)), t(k))
            if order is Ordering.LT:
                smaller += 1
            elif order is Ordering.EQ:
                equal += 1
        assert (smaller, equal) == (68, 11)
    timer.report(5, "dual involution and census over 0..2^16-1")


def test_criterion_6_successor_cost():
    with _Timer(120) as timer:
        count = 1 << 20
        x = BinTree.empty()
        total = 0
        for _ in range(count):
            x, calls = basic.successor_cost(x)
            total += calls
        average = total / count
        assert 2.0 <= average <= 2.4, average
    timer.report(6, f"mean successor cost {average:.4f} over 2^20 inputs")


def test_criterion_7_property_suites():
    with _Timer(300) as timer:
        for k in range(1, 10 ** 4 + 1):
            i, j = nat_unpair(k)
            assert nat_pair(i, j) == k
        x = BinTree.empty()
        for k in range(10 ** 4):
            y = basic.successor(x)
            assert basic.predecessor(y) == x
            x = y
        for k in range(10 ** 4):
            v = t(k + 1)
            i, j = giants.decons(v)
            assert giants.cons(i, j) == v
        for k in range(10 ** 4):
            assert basic.log2(basic.exp2(t(k))) == t(k)
        for k in range(10 ** 4):
            assert basic.half(basic.double(t(k))) == t(k)
        for k in range(100):
            for m in range(100):
                shifted = blocks.leftshift_by(t(k), t(m))
                assert advanced.rightshift_by(t(k), shifted) == t(m)
        for k in range(10 ** 4 + 1):
            x = t(k)
            size = n(complexity.catsize(x))
            assert size <= k.bit_length()
            assert size >= n(complexity.max_tdepth(x)) >= n(complexity.max_mdepth(x))
        for k in range(0, 10 ** 4, 3):
            x = t(k)
            for cls in (MultiTree, ParenWord, NatRef):
                assert core.convert(core.convert(x, cls), BinTree) == x
    timer.report(7, "property suites, >= 10^4 cases each")


def test_criterion_8_tractability():
    budgets = []
    giant = basic.exp2(basic.exp2(t(10000)))
    other = blocks.add(giant, t(12345))
    for label, op in [
        ("add", lambda: blocks.add(giant, other)),
        ("sub", lambda: blocks.sub(other, giant)),
        ("mul", lambda: advanced.mul(giant, other)),
        ("bitsize", lambda: blocks.bitsize(giant)),
        ("catsize", lambda: complexity.catsize(giant)),
    ]:
        start = time.monotonic()
        op()
        elapsed = time.monotonic() - start
        assert elapsed < 1.0, (label, elapsed)
        budgets.append(elapsed)
    print(f"criterion 8 PASS: ops on doubly iterated exponentials, "
          f"slowest {max(budgets):.3f}s")
