"""Jones-Wenzl projectors and seminormal idempotents.

The Jones-Wenzl projector JW_n is the unique nonzero idempotent of the
rational Temperley-Lieb algebra killed by every generator on both sides;
its expansion has coefficient 1 on the identity diagram.  We compute it by
the classical recursion

    JW_n = E - ((n-1)/n) * E u_(n-1) E,      E = JW_(n-1) with a strand added,

whose coefficient at loop parameter 2 is forced by u_(n-1) JW_n = 0 (the
tests validate the annihilation exactly).  Projectors are cached per n and
can be persisted to disk in the JSON element schema.

For a two-column standard tableau t with column runs D_1 M_1 ... D_k M_k
the seminormal vector f_t is built by stacking JW boxes: at stage i, add
d_i fresh strands, put JW_(n_i) on top, and bend the m_i rightmost strands
down.  Truncating to frames without top arcs gives f_t inside the cell
module of shape(t); keeping all frames and gluing a mirrored copy on top
yields the idempotent

    E'_t = (1/gamma_t) f_t* f_t,   gamma_t = prod_i (n_i+1)/(n_i-m_i+1),

which projects onto the simultaneous Jucys-Murphy eigenvector with
eigenvalues the contents of t.  The independent oracle for E'_t is the
JM interpolation product over the full content set.

Summing E'_t over a p-class gives the class idempotents, whose coefficients
are provably integral at p; summing over the tableaux indexed by the base-p
index set of n gives the p-Jones-Wenzl idempotent in its direct form.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache

from .coeffs import check_odd_prime, is_p_integral
from . import tableaux
from .tableaux import Tableau
from .diagrams import (
    CellVector,
    TLElement,
    frame_bend,
    frame_empty,
    frame_extend,
    frame_has_top_arc,
    frame_stack,
    frame_to_tableau,
    sandwich,
)


class IntegralityViolationError(ArithmeticError):
    """A class idempotent produced a coefficient with p in the denominator;
    by the general theory this never happens, so it signals a bug."""


class JWCache:
    """Cache of Jones-Wenzl expansions over Q, one element per strand count.

    The cache is the one piece of mutable state in the package; confine an
    instance to a single worker or serialize access when parallelizing.
    """

    def __init__(self):
        self.elements = {}

    def get(self, n: int) -> TLElement:
        if n < 0:
            raise ValueError("n must be >= 0")
        e = self.elements.get(n)
        if e is None:
            e = self._compute(n)
            self.elements[n] = e
        return e

    def _compute(self, n: int) -> TLElement:
        if n <= 1:
            return TLElement.one(n)
        prev = self.get(n - 1)
        e = _add_strand(prev)
        u = TLElement.generator(n - 1, n)
        return e - (e * u * e).scale(Fraction(n - 1, n))

    def load(self, path):
        with open(path) as fh:
            docs = json.load(fh)
        for doc in docs:
            self.elements[doc["n"]] = TLElement.from_json(doc["element"])

    def save(self, path):
        docs = [{"n": n, "element": self.elements[n].to_json()}
                for n in sorted(self.elements)]
        with open(path, "w") as fh:
            json.dump(docs, fh)


_default_cache = JWCache()


def default_cache() -> JWCache:
    return _default_cache


def _add_strand(e: TLElement) -> TLElement:
    """Embed TL_(n-1) into TL_n by a through strand on the right."""
    n = e.n + 1
    out = TLElement.zero(n)
    for d, c in e.terms.items():
        new = bytearray(2 * n)
        for x, y in enumerate(d):
            a = x if x < n - 1 else x + 2
            b = y if y < n - 1 else y + 2
            new[a] = b
            new[b] = a
        new[n - 1], new[n] = n, n - 1
        out.terms[bytes(new)] = c
    return out


def jones_wenzl(n: int, cache: JWCache | None = None) -> TLElement:
    return (cache or _default_cache).get(n)


def close_rightmost(e: TLElement) -> TLElement:
    """Join the rightmost northern point to the rightmost southern point
    (a partial trace down to n-1 strands); each directly closed strand
    becomes a loop worth a factor 2."""
    n = e.n
    if n < 1:
        raise ValueError("nothing to close")
    out = TLElement.zero(n - 1)
    for d, c in e.terms.items():
        if d[n - 1] == n:  # strand joins the two closed points: a loop
            pairs = {x: y for x, y in enumerate(d) if x < y and x != n - 1}
            coeff = 2 * c
        else:
            pairs = {x: y for x, y in enumerate(d)
                     if x < y and x not in (n - 1, n) and y not in (n - 1, n)}
            a, b = sorted((d[n - 1], d[n]))
            pairs[a] = b
            coeff = c
        new = bytearray(2 * (n - 1))
        for x, y in pairs.items():
            a = x if x < n - 1 else x - 2
            b = y if y < n - 1 else y - 2
            new[a] = b
            new[b] = a
        out._iadd_term(bytes(new), coeff)
    return out


def partial_close(n: int, k: int) -> Fraction:
    """The scalar by which closing the k rightmost strands of JW_n
    multiplies JW_(n-k): one closure contributes (m+1)/m at m strands,
    telescoping to (n+1)/(n-k+1)."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    return Fraction(n + 1, n - k + 1)


# ---------------------------------------------------------------------------
# seminormal vectors and idempotents


def gamma(t: Tableau) -> Fraction:
    """The normalization prod_i (n_i+1)/(n_i-m_i+1) over the column runs."""
    bd = tableaux.block_decomposition(t)
    out = Fraction(1)
    for (d, m), nv in zip(bd.runs, bd.n_values):
        out *= Fraction(nv + 1, nv - m + 1)
    return out


def _frame_expansion(t: Tableau, cache: JWCache | None = None) -> dict:
    """Expand the nested-projector picture of f_t as a combination of
    frames (planar matchings of n bottom and l1-l2 top points, top arcs
    included: those terms vanish in the cell module but contribute to the
    idempotent sandwich)."""
    cache = cache or _default_cache
    bd = tableaux.block_decomposition(t)
    state = {frame_empty(): Fraction(1)}
    for (d, m), nv in zip(bd.runs, bd.n_values):
        state = {frame_extend(fr, d): c for fr, c in state.items()}
        jw = cache.get(nv)
        new = {}
        for fr, c in state.items():
            for diag, cd in jw.terms.items():
                fr2, loops = frame_stack(fr, diag)
                coeff = c * cd * (1 << loops)
                cur = new.get(fr2)
                cur = coeff if cur is None else cur + coeff
                if cur:
                    new[fr2] = cur
                else:
                    new.pop(fr2, None)
        state = {frame_bend(fr, m): c for fr, c in new.items()}
    return state


def seminormal_vector(t: Tableau, cache: JWCache | None = None) -> CellVector:
    """f_t as an element of the cell module of shape(t): the frame
    expansion with higher-cell terms (top arcs) dropped."""
    coords = {}
    for fr, c in _frame_expansion(t, cache).items():
        if frame_has_top_arc(fr):
            continue
        u = frame_to_tableau(fr)
        coords[u] = coords.get(u, Fraction(0)) + c
    return CellVector(tableaux.shape_of(t), coords)


@lru_cache(maxsize=None)
def _seminormal_idempotent_cached(t: Tableau) -> TLElement:
    bd = tableaux.block_decomposition(t)
    if bd.k == 1 and bd.runs[0][1] == 0:
        # one-column tableau: f_t is a bare JW box and JW absorption gives
        # E'_t = JW_n * JW_n = JW_n  (gamma = 1)
        return jones_wenzl(len(t))
    frames = _frame_expansion(t)
    n = len(t)
    out = TLElement.zero(n)
    items = list(frames.items())
    for f1, c1 in items:
        for f2, c2 in items:
            d, loops = sandwich(f1, f2)
            out._iadd_term(d, c1 * c2 * (1 << loops))
    return out.scale(1 / gamma(t))


def seminormal_idempotent(t: Tableau, use_absorption: bool = True) -> TLElement:
    """E'_t = (1/gamma_t) f_t* f_t as an element of TL_n over Q."""
    if use_absorption:
        return _seminormal_idempotent_cached(tuple(t))
    frames = _frame_expansion(tuple(t))
    out = TLElement.zero(len(t))
    items = list(frames.items())
    for f1, c1 in items:
        for f2, c2 in items:
            d, loops = sandwich(f1, f2)
            out._iadd_term(d, c1 * c2 * (1 << loops))
    return out.scale(1 / gamma(t))


# ---------------------------------------------------------------------------
# the Jucys-Murphy interpolation oracle


def content_set(n: int) -> tuple:
    """All contents of entries of two-column standard tableaux with n
    entries: {1, 0, -1, ..., 1-n} for n >= 2, {0} for n = 1."""
    vals = set()
    for t in tableaux.all_standard_tableaux(n):
        vals.update(tableaux.contents(t))
    return tuple(sorted(vals))


def idempotent_by_products(t: Tableau, n: int | None = None) -> TLElement:
    """The JM interpolation formula for the projector onto the common
    eigenvector with eigenvalues the contents of t:

        prod over contents c and entries i with c != c_t(i) of
        (L_i - c) / (c_t(i) - c).

    Independent of the nested-projector construction; used as its oracle.
    """
    from .diagrams import jm_element

    n = len(t) if n is None else n
    if n != len(t):
        raise ValueError("tableau size must equal n")
    cs = content_set(n)
    cont = tableaux.contents(t)
    out = TLElement.one(n)
    for i in range(1, n + 1):
        li = jm_element(i, n)
        # polynomial in L_i: prod over c != c_t(i) of (L_i - c)/(c_t(i) - c)
        for c in cs:
            if c == cont[i - 1]:
                continue
            one = TLElement.one(n)
            out = out * (li - one.scale(c)).scale(Fraction(1, cont[i - 1] - c))
    return out


# ---------------------------------------------------------------------------
# class idempotents and the direct p-Jones-Wenzl construction


def class_idempotent(cls, p: int, ring: str = "Q") -> TLElement:
    """Sum of E'_s over a p-class, over Q; every coefficient is checked to
    be p-integral (localized at p), and with ring="Fp" the reduction mod p
    is returned."""
    check_odd_prime(p)
    cls = sorted(tuple(s) for s in cls)
    n = len(cls[0])
    expected = tableaux.p_class(cls[0], p)
    if tuple(cls) != tuple(expected):
        raise ValueError("input is not a full p-class")
    out = TLElement.zero(n)
    for s in cls:
        out = out + seminormal_idempotent(s)
    for d, c in out.terms.items():
        if not is_p_integral(c, p):
            raise IntegralityViolationError(
                f"coefficient {c} of a class idempotent is not integral at {p}")
    if ring == "Q":
        return out
    if ring == "Zp":
        return out.to_Zp(p)
    if ring == "Fp":
        return out.reduce_mod_p(p)
    raise ValueError(f"unknown ring {ring!r}")


def p_jones_wenzl_direct(n: int, p: int, ring: str = "Q") -> TLElement:
    """The p-Jones-Wenzl idempotent, directly: the sum of E'_(t_m) over the
    base-p index set of n.  p-integral, idempotent over Q and after
    reduction mod p."""
    check_odd_prime(p)
    out = TLElement.zero(n)
    for m in sorted(tableaux.index_set(n, p)):
        out = out + seminormal_idempotent(tableaux.tableau_from_index(m, n, p))
    for d, c in out.terms.items():
        if not is_p_integral(c, p):
            raise IntegralityViolationError(
                f"coefficient {c} of the p-Jones-Wenzl idempotent is not "
                f"integral at {p}")
    if ring == "Q":
        return out
    if ring == "Zp":
        return out.to_Zp(p)
    if ring == "Fp":
        return out.reduce_mod_p(p)
    raise ValueError(f"unknown ring {ring!r}")
