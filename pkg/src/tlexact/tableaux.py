"""Two-column partitions and standard tableaux.

A partition of n with at most two columns, lambda = (2^l2, 1^(l1-l2)), is
stored as the pair of column lengths (l1, l2) with l1 >= l2 and l1 + l2 = n.
A standard tableau of such a shape is stored as its ballot sequence: the
tuple (c_1, ..., c_n) where c_i in {1, 2} is the column containing the entry
i.  A column sequence is the ballot sequence of a standard tableau exactly
when every prefix contains at least as many 1s as 2s.

On top of the plain combinatorics (contents, dominance, enumeration) this
module implements the mod-p structure driving the rest of the package:
residue sequences, p-classes, block decompositions D_1 M_1 ... D_k M_k, the
base-p index set attached to n+1, the collapse bijections from the p-class
of the one-column tableau onto smaller tableaux, and the base-p radix chain
n -> n_2 -> n_2' -> ... used by the recursive constructions.

Dominance on tableaux compares the shapes of all restrictions; it is a
partial order.  Where a total enumeration order is needed we refine it
lexicographically by the column sequence (1 < 2), which is a linear
extension of dominance: if s strictly dominates t then at the first index
where they differ s has a 2 and t a 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .coeffs import check_odd_prime

Tableau = tuple  # tuple of column indices 1/2


# ---------------------------------------------------------------------------
# shapes and enumeration


def two_column_partitions(n: int) -> list:
    """All (l1, l2) with l1 >= l2 >= 0 and l1 + l2 = n, l2 descending.

    The order is decreasing dominance; for n = 0 the result is [(0, 0)],
    the empty partition.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return [(n - l2, l2) for l2 in range(n // 2, -1, -1)]


def is_standard(cols) -> bool:
    ones = 0
    twos = 0
    for c in cols:
        if c == 1:
            ones += 1
        elif c == 2:
            twos += 1
        else:
            return False
        if twos > ones:
            return False
    return True


def shape_of(t: Tableau) -> tuple:
    l2 = sum(1 for c in t if c == 2)
    return (len(t) - l2, l2)


@lru_cache(maxsize=None)
def standard_tableaux(shape: tuple) -> tuple:
    """All standard tableaux of the given shape, ascending in dominance
    (lexicographic refinement).  First element is the column-reading
    tableau, last is the row-reading tableau."""
    l1, l2 = shape
    if l1 < l2 or l2 < 0:
        raise ValueError(f"invalid two-column shape {shape}")
    n = l1 + l2
    out = []
    for positions in itertools.combinations(range(n), l2):
        cols = [1] * n
        for j in positions:
            cols[j] = 2
        if is_standard(cols):
            out.append(tuple(cols))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def all_standard_tableaux(n: int) -> tuple:
    """All two-column standard tableaux with n entries, in lexicographic
    order across shapes.  Their number is C(n, floor(n/2))."""
    out = []
    for shape in two_column_partitions(n):
        out.extend(standard_tableaux(shape))
    out.sort()
    return tuple(out)


def one_column_tableau(n: int) -> Tableau:
    return (1,) * n


def column_reading_tableau(shape: tuple) -> Tableau:
    l1, l2 = shape
    return (1,) * l1 + (2,) * l2


def row_reading_tableau(shape: tuple) -> Tableau:
    l1, l2 = shape
    return (1, 2) * l2 + (1,) * (l1 - l2)


# ---------------------------------------------------------------------------
# contents, dominance, residues


def content(t: Tableau, i: int) -> int:
    """Content c - r of the cell holding entry i (column c, row r)."""
    if not 1 <= i <= len(t):
        raise IndexError(f"entry {i} out of range 1..{len(t)}")
    c = t[i - 1]
    row = sum(1 for j in range(i) if t[j] == c)
    return c - row


def contents(t: Tableau) -> tuple:
    ones = 0
    twos = 0
    out = []
    for c in t:
        if c == 1:
            ones += 1
            out.append(1 - ones)
        else:
            twos += 1
            out.append(2 - twos)
    return tuple(out)


def residue_sequence(t: Tableau, p: int) -> tuple:
    check_odd_prime(p)
    return tuple(c % p for c in contents(t))


def dominance_compare(s: Tableau, t: Tableau) -> str:
    """Compare in the dominance order; one of "less", "equal", "greater",
    "incomparable".  s <= t iff shape(s|<=m) <= shape(t|<=m) for every m,
    which for two columns means every prefix of s has at most as many 2s
    as the same prefix of t."""
    if len(s) != len(t):
        raise ValueError("tableaux must have the same number of entries")
    le = ge = True
    ds = 0  # (number of 2s in s-prefix) - (number of 2s in t-prefix)
    for a, b in zip(s, t):
        ds += (a == 2) - (b == 2)
        if ds > 0:
            le = False
        if ds < 0:
            ge = False
    if le and ge:
        return "equal"
    if le:
        return "less"
    if ge:
        return "greater"
    return "incomparable"


def swap_adjacent(t: Tableau, k: int):
    """The tableau t*s_k (entries k, k+1 exchanged), or None when that
    tableau is not standard (k, k+1 in the same row or column)."""
    if not 1 <= k < len(t):
        raise IndexError(f"index {k} out of range")
    if t[k - 1] == t[k]:
        return None  # same column: the swapped tableau is not standard
    s = list(t)
    s[k - 1], s[k] = s[k], s[k - 1]
    if not is_standard(s):
        return None  # same row: the ballot condition fails at position k
    return tuple(s)


def same_row(t: Tableau, k: int) -> bool:
    """True iff entries k and k+1 occupy the same row of t."""
    if t[k - 1] != 1 or t[k] != 2:
        return False
    row_a = sum(1 for j in range(k) if t[j] == 1)
    row_b = sum(1 for j in range(k + 1) if t[j] == 2)
    return row_a == row_b


# ---------------------------------------------------------------------------
# p-classes


@lru_cache(maxsize=None)
def _classes_by_residue(n: int, p: int) -> dict:
    classes = {}
    for t in all_standard_tableaux(n):
        classes.setdefault(residue_sequence(t, p), []).append(t)
    return {r: tuple(ts) for r, ts in classes.items()}


def p_class(t: Tableau, p: int) -> tuple:
    """All two-column standard tableaux with the same residue sequence as
    t, sorted lexicographically.  Always contains t."""
    return _classes_by_residue(len(t), p)[residue_sequence(t, p)]


def all_p_classes(n: int, p: int) -> list:
    """Every p-class of two-column standard tableaux with n entries,
    ordered by their lexicographically smallest member."""
    return sorted(_classes_by_residue(n, p).values())


def class_of_one_column(n: int, p: int) -> tuple:
    return p_class(one_column_tableau(n), p)


# ---------------------------------------------------------------------------
# block decompositions


@dataclass(frozen=True)
class BlockDecomposition:
    """The alternating column runs D_1, M_1, ..., D_k, M_k of a tableau.

    runs[i] = (d_i, m_i) are the run lengths; all d_i > 0 and all m_i > 0
    except possibly the last.  n_values[i] is the number of strands feeding
    the i-th stage of the nested-projector construction:
    n_1 = d_1 and n_i = (d_1 + ... + d_i) - (m_1 + ... + m_(i-1)).
    """

    runs: tuple
    n_values: tuple

    @property
    def k(self) -> int:
        return len(self.runs)

    def to_tableau(self) -> Tableau:
        out = []
        for d, m in self.runs:
            out.extend([1] * d)
            out.extend([2] * m)
        return tuple(out)


def block_decomposition(t: Tableau) -> BlockDecomposition:
    if not t:
        return BlockDecomposition((), ())
    if not is_standard(t):
        raise ValueError("not a standard tableau")
    runs = []
    i = 0
    n = len(t)
    while i < n:
        d = 0
        while i < n and t[i] == 1:
            d += 1
            i += 1
        m = 0
        while i < n and t[i] == 2:
            m += 1
            i += 1
        runs.append((d, m))
    n_values = []
    dsum = msum = 0
    for d, m in runs:
        dsum += d
        n_values.append(dsum - msum)
        msum += m
    return BlockDecomposition(tuple(runs), tuple(n_values))


# ---------------------------------------------------------------------------
# base-p expansion, the index set, and its tableaux


def base_p_digits(value: int, p: int) -> tuple:
    """Digits of value in base p, most significant first; value >= 1."""
    if value < 1:
        raise ValueError("value must be >= 1")
    digits = []
    while value:
        value, a = divmod(value, p)
        digits.append(a)
    return tuple(reversed(digits))


def index_set(n: int, p: int) -> dict:
    """The base-p index set attached to n: writing n+1 = sum a_j p^j with
    leading digit a_k != 0, its elements are (a_k p^k +- a_(k-1) p^(k-1)
    +- ... +- a_0) - 1 over all sign choices at the nonzero digits below
    the leading one.  Returns {m: signs} where signs is the per-digit sign
    tuple (most significant first, +1 at zero digits)."""
    check_odd_prime(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    digits = base_p_digits(n + 1, p)
    lower = digits[1:]
    choice_positions = [j for j, a in enumerate(lower) if a != 0]
    out = {}
    for signs in itertools.product((1, -1), repeat=len(choice_positions)):
        full = [1] * len(lower)
        for pos, eps in zip(choice_positions, signs):
            full[pos] = eps
        value = digits[0]
        for a, eps in zip(lower, full):
            value = value * p + eps * a
        out[value - 1] = (1,) + tuple(full)
    return out


def tableau_from_index(m: int, n: int, p: int) -> Tableau:
    """The tableau attached to an element m of the index set: maximal
    constant-sign digit runs give the block cardinalities |D_1| = (leading
    positive run value) - 1, then |M_1|, |D_2|, ... as the run values."""
    signs = index_set(n, p).get(m)
    if signs is None:
        raise ValueError(f"{m} is not in the index set of n={n}, p={p}")
    digits = base_p_digits(n + 1, p)
    k = len(digits) - 1
    runs = []
    pos = 0
    sign = 1
    while pos <= k:
        value = 0
        while pos <= k and (digits[pos] == 0 or signs[pos] == sign):
            value += digits[pos] * p ** (k - pos)
            pos += 1
        runs.append(value)
        sign = -sign
    cards = []
    for j, value in enumerate(runs):
        cards.append(value - 1 if j == 0 else value)
    out = []
    for j, c in enumerate(cards):
        out.extend([1 if j % 2 == 0 else 2] * c)
    t = tuple(out)
    assert len(t) == n and is_standard(t)
    return t


def index_set_tableaux(n: int, p: int) -> dict:
    return {m: tableau_from_index(m, n, p) for m in index_set(n, p)}


# ---------------------------------------------------------------------------
# the radix chain and the collapse maps


@dataclass(frozen=True)
class RadixChain:
    """The ladder of integer divisions below n:  at each level,
    n = (p-1) + n1 and n1 = p*n2 + r, and the next level starts at n2.
    Writing n+1 in base p as digits (a_k, ..., a_0), level i satisfies
    r_i = a_i and n2_i + 1 = a_k p^(k-i-1) + ... + a_(i+1); the ladder
    bottoms out at n2_(k-1) = a_k - 1.  For n < p there are no levels."""

    n: int
    p: int
    digits: tuple
    levels: tuple  # tuples (n_i, n1_i, n2_i, r_i)

    @property
    def sizes(self) -> tuple:
        """(n, n2_0, n2_1, ..., n2_(k-1)) -- the algebra sizes of the chain."""
        return (self.n,) + tuple(level[2] for level in self.levels)


def radix_chain(n: int, p: int) -> RadixChain:
    check_odd_prime(p)
    digits = base_p_digits(n + 1, p)
    k = len(digits) - 1 if n >= p else 0
    levels = []
    cur = n
    for i in range(k):
        n1 = cur - (p - 1)
        n2, r = divmod(n1, p)
        levels.append((cur, n1, n2, r))
        assert r == digits[k - i]
        cur = n2
    if k:
        assert levels[-1][2] == digits[0] - 1
    return RadixChain(n, p, digits, tuple(levels))


def _class_blocks(t: Tableau, p: int):
    """Split a member of the p-class of the one-column tableau into its
    head 1..p-1, the length-p blocks B_1..B_n2, and the extra block of
    length r; each block sits in a single column."""
    n = len(t)
    if n < p:
        raise ValueError("collapse needs n >= p")
    if residue_sequence(t, p) != residue_sequence(one_column_tableau(n), p):
        raise ValueError("tableau is not in the p-class of the one-column tableau")
    n1 = n - (p - 1)
    n2, r = divmod(n1, p)
    cols = []
    for b in range(n2):
        block = t[p - 1 + b * p: p - 1 + (b + 1) * p]
        assert len(set(block)) == 1
        cols.append(block[0])
    extra = None
    if r:
        block = t[n - r:]
        assert len(set(block)) == 1
        extra = block[0]
    return cols, extra


def collapse(t: Tableau, p: int):
    """Collapse a member of the p-class of the one-column tableau to a
    tableau of size n2 (one entry per length-p block), plus the column tag
    1 or 2 of the extra length-r block when r > 0.

    Returns (tableau, None) when r = 0 and (tableau, tag) when r > 0;
    when n2 = 0 the first component is the empty tableau ().
    """
    cols, extra = _class_blocks(t, p)
    small = tuple(cols)
    assert is_standard(small)
    return small, extra


def collapse_fiber(s: Tableau, n: int, p: int) -> tuple:
    """All members t of the p-class of the one-column tableau of size n
    with collapse(t, p)[0] == s, sorted; s has size n2."""
    out = [t for t in class_of_one_column(n, p) if collapse(t, p)[0] == s]
    return tuple(out)


def apply_block_swap(t: Tableau, i: int, p: int):
    """Exchange the length-p blocks B_i and B_(i+1) of a p-class member of
    the one-column tableau; None when the result is not standard."""
    cols, _ = _class_blocks(t, p)
    if not 1 <= i < len(cols):
        raise IndexError(f"block index {i} out of range")
    if cols[i - 1] == cols[i]:
        return None
    s = list(t)
    lo = p - 1 + (i - 1) * p
    s[lo: lo + p], s[lo + p: lo + 2 * p] = s[lo + p: lo + 2 * p], s[lo: lo + p]
    if not is_standard(s):
        return None
    return tuple(s)
