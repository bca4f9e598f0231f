"""Arithmetic on hereditarily run-length compressed natural numbers.

Numbers are trees: the run lengths of a binary expansion are themselves
compressed, recursively, so values near towers of exponents take space
proportional to the height of the tower instead of their bitsize.
"""

from catnum.advanced import div_rem, divide, mul, pow, remainder, rightshift_by, square
from catnum.basic import (
    Parity,
    double,
    exp2,
    half,
    is_one,
    log2,
    one,
    parity,
    predecessor,
    successor,
    successor_cost,
)
from catnum.blocks import (
    Ordering,
    add,
    bitsize,
    compare,
    ilog2,
    leftshift_by,
    leftshift_by1,
    leftshift_by2,
    sub,
)
from catnum.complexity import (
    best_case,
    catalan_number,
    catsize,
    dual,
    enumerate_catsized,
    iterated,
    max_mdepth,
    max_tdepth,
    worst_case,
)
from catnum.core import (
    DEFAULT_CAP,
    CatValue,
    cat_show,
    convert,
    from_int,
    from_list,
    parse_paren,
    to_int,
    to_list,
)
from catnum.giants import PrimeKind, cons, decons, hd, nsyr, record_prime, syracuse, tl
from catnum.instances import (
    BinTree,
    MultiTree,
    NatRef,
    ParenWord,
    nat_pair,
    nat_unpair,
    paren_pair,
    paren_unpair,
)

__version__ = "0.1.0"

__all__ = [
    "BinTree",
    "MultiTree",
    "NatRef",
    "ParenWord",
    "CatValue",
    "Ordering",
    "Parity",
    "PrimeKind",
    "DEFAULT_CAP",
    "add",
    "best_case",
    "bitsize",
    "cat_show",
    "catalan_number",
    "catsize",
    "compare",
    "cons",
    "convert",
    "decons",
    "div_rem",
    "divide",
    "double",
    "dual",
    "enumerate_catsized",
    "exp2",
    "from_int",
    "from_list",
    "half",
    "hd",
    "ilog2",
    "is_one",
    "iterated",
    "leftshift_by",
    "leftshift_by1",
    "leftshift_by2",
    "log2",
    "max_mdepth",
    "max_tdepth",
    "mul",
    "nat_pair",
    "nat_unpair",
    "nsyr",
    "one",
    "paren_pair",
    "paren_unpair",
    "parity",
    "parse_paren",
    "pow",
    "predecessor",
    "record_prime",
    "remainder",
    "rightshift_by",
    "square",
    "sub",
    "successor",
    "successor_cost",
    "syracuse",
    "tl",
    "to_int",
    "to_list",
    "worst_case",
]
