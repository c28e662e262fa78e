"""The Temperley-Lieb diagram algebra at loop parameter 2.

Basis diagrams are non-crossing perfect matchings of n northern and n
southern points of a rectangle.  Endpoints are labelled circularly:
0..n-1 run along the northern edge left to right, n..2n-1 continue along
the southern edge *right to left* (so label n is the rightmost southern
point and 2n-1 the leftmost).  In these labels non-crossing is exactly the
balanced-parenthesis property, and reflection through a horizontal axis
(the * anti-automorphism) is the relabelling x -> 2n-1-x.

A matching is stored as a ``bytes`` string ``pairing`` of length 2n with
pairing[pairing[x]] == x; byte strings hash fast and keep elements (sparse
dicts diagram -> coefficient) cheap.  Products concatenate the left factor
on top of the right one; every closed loop is removed against a factor of
2 (the loop parameter).  Because planar through strands connect in order,
the middle gluing of a product depends only on the southern cup pattern of
the top factor and the northern cup pattern of the bottom factor; those
gluings are memoized per strand count, which makes large element products
(Jones-Wenzl squares and idempotent sandwiches) much faster than tracing
every diagram pair.

Elements carry one of three coefficient rings: "Q" (Fraction), "Zp"
(Fraction, checked p-integral), or "Fp" (integers mod p).

The module also provides the half-diagram machinery: "frames" are planar
matchings of B bottom and S top points used both for the cell modules and
for the nested-projector construction in :mod:`tlexact.projectors`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .coeffs import format_rational, is_p_integral, parse_rational, check_odd_prime
from . import tableaux
from .tableaux import Tableau


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _lcm_denominators(terms) -> int:
    den = 1
    for c in terms.values():
        d = c.denominator
        if d != 1:
            from math import gcd
            den = den // gcd(den, d) * d
    return den


# ---------------------------------------------------------------------------
# pairings


def identity_pairing(n: int) -> bytes:
    return bytes(2 * n - 1 - x for x in range(2 * n))


def generator_pairing(i: int, n: int) -> bytes:
    """The diagram of the generator u_i: cups (i, i+1) on both edges,
    through strands elsewhere.  1 <= i < n."""
    if not 1 <= i < n:
        raise IndexError(f"generator index {i} out of range for n={n}")
    p = bytearray(identity_pairing(n))

    def join(a, b):
        p[a] = b
        p[b] = a

    join(i - 1, i)                       # northern cup
    join(2 * n - i, 2 * n - 1 - i)       # southern cup at positions i-1, i
    return bytes(p)


def is_noncrossing(pairing) -> bool:
    stack = []
    for x, y in enumerate(pairing):
        if pairing[y] != x or y == x:
            return False
        if y > x:
            stack.append(x)
        else:
            if not stack or stack[-1] != y:
                return False
            stack.pop()
    return not stack


def all_matchings(n: int) -> list:
    """All non-crossing perfect matchings of 2n circular points, sorted."""

    def build(points):
        if not points:
            yield {}
            return
        a = points[0]
        for j in range(1, len(points), 2):
            b = points[j]
            for left in build(points[1:j]):
                for right in build(points[j + 1:]):
                    d = {a: b, b: a}
                    d.update(left)
                    d.update(right)
                    yield d

    out = [bytes(d[x] for x in range(2 * n)) for d in build(list(range(2 * n)))]
    return sorted(out)


def star_pairing(pairing: bytes) -> bytes:
    two_n = len(pairing)
    return bytes(two_n - 1 - pairing[two_n - 1 - x] for x in range(two_n))


def compose_pairings(top: bytes, bot: bytes, n: int):
    """Concatenate ``top`` above ``bot``; returns (pairing, loops).

    Straightforward strand tracing; the memoized fast path used by element
    products lives in _MulContext, and this reference version backs the
    frame machinery and differential tests.
    """
    two_n = 2 * n
    last = two_n - 1
    out = [255] * two_n
    used = [False] * n
    for start in range(two_n):
        if out[start] != 255:
            continue
        layer = 0 if start < n else 1
        x = start
        while True:
            if layer == 0:
                y = top[x]
                if y < n:
                    b = y
                    break
                j = last - y
                used[j] = True
                layer = 1
                x = j
            else:
                y = bot[x]
                if y >= n:
                    b = y
                    break
                used[y] = True
                layer = 0
                x = last - y
        out[start] = b
        out[b] = start
    loops = 0
    for j in range(n):
        if not used[j]:
            loops += 1
            used[j] = True
            layer = 1
            x = j
            while True:
                if layer == 1:
                    j2 = bot[x]          # < n on an internal cycle
                    layer = 0
                    x = last - j2
                else:
                    j2 = last - top[x]
                    layer = 1
                    x = j2
                if j2 == j:
                    break
                used[j2] = True
    return bytes(out), loops


class _MulContext:
    """Per-strand-count multiplication tables.

    For a planar diagram the through strands connect their northern
    endpoints to their southern endpoints in order, so the result of gluing
    d1 over d2 is determined by (a) d1's southern cup pattern against d2's
    northern cup pattern -- memoized as loops plus a pairing of through
    slots -- and (b) the cup patterns d1 keeps on top and d2 keeps below,
    wired through the slot pairing.
    """

    __slots__ = ("n", "meta", "glue_memo", "pair_memo")

    def __init__(self, n):
        self.n = n
        self.meta = {}
        self.glue_memo = {}
        # full product memo; the diagram basis is small enough up to n = 7
        self.pair_memo = {} if n <= 7 else None

    def diagram_meta(self, d: bytes):
        """(south_key, north_key, north_slots, south_slots) for a diagram;
        slots are the through endpoints, northern ones in increasing label
        order and southern ones in decreasing label order (both = left to
        right)."""
        m = self.meta.get(d)
        if m is None:
            n = self.n
            nslots = bytes(x for x in range(n) if d[x] >= n)
            sslots = bytes(2 * n - 1 - j for j in range(n)
                           if d[2 * n - 1 - j] < n)
            skey = bytes(v for x in range(n, 2 * n) if x < d[x]
                         for v in (x, d[x]))
            nkey = bytes(v for x in range(n) if x < d[x] < n
                         for v in (x, d[x]))
            m = (skey, nkey, nslots, sslots)
            self.meta[d] = m
        return m

    def glue(self, skey: bytes, nkey: bytes):
        """Glue a southern cup pattern (on labels n..2n-1) against a
        northern cup pattern (labels 0..n-1) across the n middle points.
        Returns (loops, slot interface): slots of the top factor are
        numbered 0..k1-1 and of the bottom factor k1..k1+k2-1, and the
        interface lists the induced pairing, each pair once."""
        key = (skey, nkey)
        hit = self.glue_memo.get(key)
        if hit is not None:
            return hit
        n = self.n
        last = 2 * n - 1
        top_cup = {}
        for t in range(0, len(skey), 2):
            a, b = last - skey[t], last - skey[t + 1]  # as middle positions
            top_cup[a] = b
            top_cup[b] = a
        bot_cup = {}
        for t in range(0, len(nkey), 2):
            a, b = nkey[t], nkey[t + 1]
            bot_cup[a] = b
            bot_cup[b] = a
        top_slot = {}
        idx = 0
        for j in range(n):
            if j not in top_cup:
                top_slot[j] = idx
                idx += 1
        k1 = idx
        bot_slot = {}
        idx = 0
        for j in range(n):
            if j not in bot_cup:
                bot_slot[j] = idx
                idx += 1
        # walk components of the union of the two cup patterns
        interface = []
        seen = [False] * n
        for j0 in range(n):
            if seen[j0] or (j0 in top_cup and j0 in bot_cup):
                continue
            if j0 in top_slot and j0 in bot_slot:
                # isolated middle point: a genuine through strand
                seen[j0] = True
                interface.append((top_slot[j0], k1 + bot_slot[j0]))
                continue
            # start from a slot endpoint and follow cups alternately
            if j0 in top_slot:
                end0 = top_slot[j0]
                side = "top"  # next cup to use is on the top side? no: start
            elif j0 in bot_slot:
                end0 = k1 + bot_slot[j0]
                side = "bot"
            else:
                continue
            # j0 is a slot on one side and a cup endpoint on the other
            seen[j0] = True
            j = j0
            use_top = j0 not in top_slot  # which side's cup to follow next
            while True:
                j = top_cup[j] if use_top else bot_cup[j]
                seen[j] = True
                if use_top:
                    if j in bot_cup:
                        use_top = False
                        continue
                    end1 = k1 + bot_slot[j]
                    break
                else:
                    if j in top_cup:
                        use_top = True
                        continue
                    end1 = top_slot[j]
                    break
            interface.append(tuple(sorted((end0, end1))))
        loops = 0
        for j0 in range(n):
            if seen[j0] or j0 not in top_cup or j0 not in bot_cup:
                continue
            loops += 1
            j = j0
            use_top = True
            while True:
                seen[j] = True
                j = top_cup[j] if use_top else bot_cup[j]
                use_top = not use_top
                if j == j0 and use_top:
                    break
                seen[j] = True
        result = (loops, tuple(sorted(set(interface))))
        self.glue_memo[key] = result
        return result

    def compose(self, d1: bytes, d2: bytes):
        memo = self.pair_memo
        if memo is not None:
            key = d1 + d2
            hit = memo.get(key)
            if hit is not None:
                return hit
        n = self.n
        skey, _, nslots1, _ = self.diagram_meta(d1)
        _, nkey, _, sslots2 = self.diagram_meta(d2)
        loops, interface = self.glue(skey, nkey)
        out = bytearray(2 * n)
        for x in range(n):
            y = d1[x]
            if y < n:
                out[x] = y
        for x in range(n, 2 * n):
            y = d2[x]
            if y >= n:
                out[x] = y
        k1 = len(nslots1)
        for a, b in interface:
            xa = nslots1[a] if a < k1 else sslots2[a - k1]
            xb = nslots1[b] if b < k1 else sslots2[b - k1]
            out[xa] = xb
            out[xb] = xa
        result = (bytes(out), loops)
        if memo is not None:
            memo[key] = result
        return result


_mul_contexts: dict = {}


def _context(n: int) -> _MulContext:
    ctx = _mul_contexts.get(n)
    if ctx is None:
        ctx = _MulContext(n)
        _mul_contexts[n] = ctx
    return ctx


# ---------------------------------------------------------------------------
# elements


_RINGS = ("Q", "Zp", "Fp")


class TLElement:
    """A sparse linear combination of Temperley-Lieb diagrams."""

    __slots__ = ("n", "ring", "p", "terms")

    def __init__(self, n, terms=None, ring="Q", p=None):
        if ring not in _RINGS:
            raise ValueError(f"unknown ring {ring!r}")
        if ring in ("Zp", "Fp"):
            check_odd_prime(p)
        elif p is not None:
            raise ValueError("p only makes sense for Zp/Fp")
        self.n = n
        self.ring = ring
        self.p = p
        self.terms = {}
        if terms:
            for d, c in terms.items():
                self._iadd_term(bytes(d), c)

    # -- construction helpers

    @classmethod
    def zero(cls, n, ring="Q", p=None):
        return cls(n, {}, ring, p)

    @classmethod
    def one(cls, n, ring="Q", p=None):
        return cls(n, {identity_pairing(n): 1}, ring, p)

    @classmethod
    def generator(cls, i, n, ring="Q", p=None):
        return cls(n, {generator_pairing(i, n): 1}, ring, p)

    def _coerce(self, c):
        if self.ring == "Fp":
            if isinstance(c, Fraction):
                if c.denominator % self.p == 0:
                    raise ValueError("non-p-integral coefficient in Fp element")
                return c.numerator * pow(c.denominator, -1, self.p) % self.p
            return int(c) % self.p
        c = Fraction(c)
        if self.ring == "Zp" and not is_p_integral(c, self.p):
            raise ValueError(f"coefficient {c} is not integral at p={self.p}")
        return c

    def _iadd_term(self, d, c):
        c = self._coerce(c)
        cur = self.terms.get(d)
        new = c if cur is None else cur + c
        if self.ring == "Fp":
            new %= self.p
        if new:
            self.terms[d] = new
        elif cur is not None:
            del self.terms[d]

    def _check_compatible(self, other):
        if not isinstance(other, TLElement):
            raise TypeError("expected a TLElement")
        if (self.n, self.ring, self.p) != (other.n, other.ring, other.p):
            raise ValueError("mismatched strand count or coefficient ring")

    def _raw(self, terms):
        out = TLElement.zero(self.n, self.ring, self.p)
        out.terms = terms
        return out

    # -- ring operations

    def __add__(self, other):
        self._check_compatible(other)
        out = TLElement(self.n, self.terms, self.ring, self.p)
        for d, c in other.terms.items():
            out._iadd_term(d, c)
        return out

    def __sub__(self, other):
        self._check_compatible(other)
        out = TLElement(self.n, self.terms, self.ring, self.p)
        for d, c in other.terms.items():
            out._iadd_term(d, -c)
        return out

    def scale(self, c):
        out = TLElement.zero(self.n, self.ring, self.p)
        c = out._coerce(c)
        if not c:
            return out
        if self.ring == "Fp":
            return self._raw({d: co * c % self.p for d, co in self.terms.items()})
        return self._raw({d: co * c for d, co in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, TLElement):
            return self.scale(other)
        self._check_compatible(other)
        ctx = _context(self.n)
        compose = ctx.compose
        acc = {}
        get = acc.get
        if self.ring == "Fp":
            p = self.p
            for d1, c1 in self.terms.items():
                for d2, c2 in other.terms.items():
                    d3, loops = compose(d1, d2)
                    c = c1 * c2 * (1 << loops)
                    cur = get(d3)
                    acc[d3] = c if cur is None else cur + c
            acc = {d: c % p for d, c in acc.items() if c % p}
            return self._raw(acc)
        # rational rings: clear denominators so the inner loop multiplies
        # plain integers; one Fraction per output diagram at the end
        da = _lcm_denominators(self.terms)
        db = _lcm_denominators(other.terms)
        a = {d: int(c * da) for d, c in self.terms.items()}
        b = {d: int(c * db) for d, c in other.terms.items()}
        for d1, c1 in a.items():
            for d2, c2 in b.items():
                d3, loops = compose(d1, d2)
                c = c1 * c2 << loops
                cur = get(d3)
                acc[d3] = c if cur is None else cur + c
        den = da * db
        acc = {d: Fraction(c, den) for d, c in acc.items() if c}
        return self._raw(acc)

    __rmul__ = scale

    def star(self):
        out = TLElement.zero(self.n, self.ring, self.p)
        out.terms = {star_pairing(d): c for d, c in self.terms.items()}
        return out

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return (self.n, self.ring, self.p) == (other.n, other.ring, other.p) \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.ring, self.p, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def coeff(self, pairing):
        z = 0 if self.ring == "Fp" else Fraction(0)
        return self.terms.get(bytes(pairing), z)

    def items(self):
        """Deterministic (pairing, coeff) iteration."""
        return sorted(self.terms.items())

    def __repr__(self):
        return f"TLElement(n={self.n}, ring={self.ring}, {len(self.terms)} terms)"

    # -- ring changes

    def to_Zp(self, p):
        return TLElement(self.n, self.terms, "Zp", p)

    def reduce_mod_p(self, p=None):
        p = p if p is not None else self.p
        check_odd_prime(p)
        out = TLElement.zero(self.n, "Fp", p)
        for d, c in self.terms.items():
            out._iadd_term(d, c)
        return out

    # -- serialization (schema: n, ring, p?, terms: [{pairing, coeff}])

    def to_json(self) -> dict:
        doc = {"n": self.n, "ring": self.ring}
        if self.p is not None:
            doc["p"] = self.p
        fmt = str if self.ring == "Fp" else format_rational
        doc["terms"] = [{"pairing": list(d), "coeff": fmt(c)}
                        for d, c in self.items()]
        return doc

    @classmethod
    def from_json(cls, doc) -> "TLElement":
        ring = doc["ring"]
        p = doc.get("p")
        parse = int if ring == "Fp" else parse_rational
        out = cls.zero(doc["n"], ring, p)
        for term in doc["terms"]:
            out._iadd_term(bytes(term["pairing"]), parse(term["coeff"]))
        return out


# ---------------------------------------------------------------------------
# words: the image of the symmetric group, JM elements, diagram factorization


def phi_word(word, n, ring="Q", p=None) -> TLElement:
    """Image of the word s_(w1) s_(w2) ... under s_i -> u_i - 1."""
    out = TLElement.one(n, ring, p)
    for i in word:
        out = out * (TLElement.generator(i, n, ring, p) - TLElement.one(n, ring, p))
    return out


def phi(terms, n, ring="Q", p=None) -> TLElement:
    """Linear extension of phi_word to formal sums [(coeff, word), ...].
    A bare word (possibly empty, mapping to the unit) is also accepted."""
    terms = list(terms)
    if all(isinstance(x, int) for x in terms):
        return phi_word(terms, n, ring, p)
    out = TLElement.zero(n, ring, p)
    for c, word in terms:
        out = out + phi_word(word, n, ring, p).scale(c)
    return out


def transposition_word(j, i) -> tuple:
    """The palindromic reduced word s_j s_(j+1) .. s_(i-1) .. s_(j+1) s_j
    for the transposition (j i), j < i."""
    if not j < i:
        raise ValueError("need j < i")
    up = list(range(j, i))
    return tuple(up + up[-2::-1])


@lru_cache(maxsize=None)
def _jm_cached(i: int, n: int):
    if not 1 <= i <= n:
        raise IndexError(f"JM index {i} out of range 1..{n}")
    out = TLElement.zero(n)
    for j in range(1, i):
        out = out + phi_word(transposition_word(j, i), n)
    return out


def jm_element(i: int, n: int, ring="Q", p=None) -> TLElement:
    """The i-th Jucys-Murphy element: the image under phi of the sum of
    transpositions (1 i) + ... + (i-1 i); zero for i = 1."""
    e = _jm_cached(i, n)
    if ring == "Q":
        return e
    return TLElement(n, e.terms, ring, p)


@lru_cache(maxsize=None)
def diagram_words(n: int) -> dict:
    """A shortest u-generator word for every diagram, found by BFS from the
    identity.  Every diagram is a loop-free product of generators, so the
    search covers the whole basis."""
    ctx = _context(n)
    start = identity_pairing(n)
    words = {start: ()}
    queue = [start]
    gens = [generator_pairing(i, n) for i in range(1, n)]
    while queue:
        nxt = []
        for d in queue:
            w = words[d]
            for i, g in enumerate(gens, start=1):
                d2, loops = ctx.compose(d, g)
                if loops == 0 and d2 not in words:
                    words[d2] = w + (i,)
                    nxt.append(d2)
        queue = nxt
    assert len(words) == catalan(n)
    return words


def element_to_str(e: TLElement, max_word_n: int = 8) -> str:
    """Human-readable form: u-generator monomials when n is small enough to
    factor diagrams (identity printed as "1"), pairing lists otherwise."""
    if e.is_zero():
        return "0"
    fmt = str if e.ring == "Fp" else format_rational
    parts = []
    if e.n <= max_word_n:
        words = diagram_words(e.n)
        keyed = sorted(((len(words[d]), words[d]), d, c) for d, c in e.terms.items())
        for (_, word), _, c in keyed:
            mono = " ".join(f"u{i}" for i in word) if word else "1"
            parts.append((fmt(c), mono))
    else:
        for d, c in e.items():
            cups = "".join(f"({x} {y})" for x, y in enumerate(d) if x < y)
            parts.append((fmt(c), cups))
    out = []
    for coeff, mono in parts:
        sign = "+"
        if coeff.startswith("-"):
            sign, coeff = "-", coeff[1:]
        if mono == "1":
            text = coeff
        elif coeff == "1":
            text = mono
        else:
            text = f"{coeff} {mono}"
        if not out:
            out.append(text if sign == "+" else f"-{text}")
        else:
            out.append(f"{sign} {text}")
    return " ".join(out)


# ---------------------------------------------------------------------------
# frames: planar matchings of B bottom points and S top points
#
# Labels are circular: bottom points 0..B-1 left to right, then top points
# continue right to left, so top position j (from the left, 0-based) has
# label B + (S-1-j).  Bending the rightmost m top points down to the bottom
# is then the identity on labels: only B changes.  A frame is the pair
# (pairing, B).


def frame_empty():
    return (b"", 0)


def frame_n_top(frame) -> int:
    pairing, nbot = frame
    return len(pairing) - nbot


def frame_extend(frame, d: int):
    """Append d through strands at the right edge."""
    pairing, nbot = frame
    new = bytearray(len(pairing) + 2 * d)
    for x, y in enumerate(pairing):
        a = x if x < nbot else x + 2 * d
        b = y if y < nbot else y + 2 * d
        new[a] = b
    for j in range(d):
        a = nbot + j              # new bottom point
        b = nbot + 2 * d - 1 - j  # its top end (nested)
        new[a] = b
        new[b] = a
    return (bytes(new), nbot + d)


def frame_bend(frame, m: int):
    """Bend the m rightmost top points down to the bottom right; in the
    circular labelling this only reinterprets m top labels as bottoms."""
    pairing, nbot = frame
    if m > len(pairing) - nbot:
        raise ValueError("cannot bend more strands than the frame has on top")
    return (pairing, nbot + m)


def frame_stack(frame, diagram: bytes):
    """Put an (S x S) diagram on top of the frame's S top points.
    Returns (frame, loops).  Frame top position j (label nbot + S-1-j)
    glues to the diagram's southern position j (label 2S-1-j)."""
    pairing, nbot = frame
    S = len(pairing) - nbot
    assert len(diagram) == 2 * S, "diagram size must match the frame's top"
    out = bytearray(len(pairing))
    done = [False] * len(pairing)
    used = [False] * S  # glue positions

    def trace(layer, x):
        # 0 = frame, 1 = diagram; returns the final label in the new frame
        while True:
            if layer == 0:
                y = pairing[x]
                if y < nbot:
                    return y
                j = nbot + S - 1 - y
                used[j] = True
                layer, x = 1, 2 * S - 1 - j
            else:
                y = diagram[x]
                if y < S:
                    return nbot + S - 1 - y  # north position y -> top label
                j = 2 * S - 1 - y
                used[j] = True
                layer, x = 0, nbot + S - 1 - j

    for b in range(nbot):
        if done[b]:
            continue
        lab = trace(0, b)
        out[b], out[lab] = lab, b
        done[b] = done[lab] = True
    for v in range(S):  # remaining outer points: diagram north
        lab = nbot + S - 1 - v
        if done[lab]:
            continue
        other = trace(1, v)
        out[lab], out[other] = other, lab
        done[lab] = done[other] = True
    loops = 0
    for j in range(S):
        if used[j]:
            continue
        loops += 1
        used[j] = True
        layer, x = 1, 2 * S - 1 - j
        while True:
            if layer == 1:
                jj = 2 * S - 1 - diagram[x]   # diagram south on a loop
                nxt = (0, nbot + S - 1 - jj)
            else:
                jj = nbot + S - 1 - pairing[x]  # frame top on a loop
                nxt = (1, 2 * S - 1 - jj)
            if jj == j:
                break
            used[jj] = True
            layer, x = nxt
    return ((bytes(out), nbot), loops)


def frame_has_top_arc(frame) -> bool:
    pairing, nbot = frame
    return any(y >= nbot for x, y in enumerate(pairing) if x >= nbot)


def frame_to_tableau(frame) -> Tableau:
    """Read the ballot sequence off a frame without top arcs: a bottom
    point is in column 2 exactly when it is the right end of a cup."""
    pairing, nbot = frame
    cols = []
    for x in range(nbot):
        y = pairing[x]
        cols.append(2 if y < x else 1)
    t = tuple(cols)
    assert tableaux.is_standard(t)
    return t


def half_diagram(t: Tableau):
    """The half diagram of a standard tableau: scanning entries upward, a
    column-1 entry raises a through strand and a column-2 entry cups to the
    nearest free strand on its left."""
    n = len(t)
    if not tableaux.is_standard(t):
        raise ValueError("not a standard tableau")
    l1, l2 = tableaux.shape_of(t)
    S = l1 - l2
    pairing = bytearray(n + S)
    stack = []
    for i, c in enumerate(t):
        if c == 1:
            stack.append(i)
        else:
            j = stack.pop()
            pairing[j], pairing[i] = i, j
    for pos, b in enumerate(stack):  # surviving strands, left to right
        lab = n + S - 1 - pos
        pairing[b], pairing[lab] = lab, b
    return (bytes(pairing), n)


def sandwich(f1, f2):
    """Reflect frame f1 and concatenate it on top of frame f2, gluing the
    top points; both frames must have equal bottom and top counts.
    Returns (pairing, loops) of the resulting (n x n) diagram, where f1's
    bottoms become the northern points."""
    p1, n1 = f1
    p2, n2 = f2
    assert n1 == n2 and len(p1) == len(p2)
    n = n1
    S = len(p1) - n
    out = bytearray(2 * n)
    done = [False] * (2 * n)
    used = [False] * S  # glue at top positions

    def trace(layer, x):
        # layer 0 = inside f1, 1 = inside f2; glue joins equal top labels
        while True:
            pr = p1 if layer == 0 else p2
            y = pr[x]
            if y < n:
                return y if layer == 0 else 2 * n - 1 - y
            used[n + S - 1 - y] = True
            layer, x = 1 - layer, y

    for a in range(n):  # f1 bottoms = northern points
        if done[a]:
            continue
        b = trace(0, a)
        out[a], out[b] = b, a
        done[a] = done[b] = True
    for bb in range(n):  # f2 bottoms = southern points
        lab = 2 * n - 1 - bb
        if done[lab]:
            continue
        b = trace(1, bb)
        out[lab], out[b] = b, lab
        done[lab] = done[b] = True
    loops = 0
    for pos in range(S):
        if used[pos]:
            continue
        loops += 1
        used[pos] = True
        layer, x = 0, n + S - 1 - pos
        while True:
            pr = p1 if layer == 0 else p2
            y = pr[x]
            v = n + S - 1 - y  # next glue position (y >= n on a loop)
            if v == pos:
                break
            used[v] = True
            layer, x = 1 - layer, y
    return bytes(out), loops


def stack_under(frame, diagram: bytes):
    """Concatenate a frame on top of an (n x n) diagram (frame bottoms glue
    to the diagram's northern points).  Returns (frame, loops)."""
    pairing, nbot = frame
    n = nbot
    assert len(diagram) == 2 * n
    S = len(pairing) - n
    out = bytearray(len(pairing))
    done = [False] * len(pairing)
    used = [False] * n

    def trace(layer, x):
        # layer 0 = frame, 1 = diagram; exits at frame top or diagram south
        while True:
            if layer == 0:
                y = pairing[x]
                if y >= n:
                    return y  # top labels agree in the result
                used[y] = True
                layer, x = 1, y
            else:
                y = diagram[x]
                if y >= n:
                    return 2 * n - 1 - y  # south position = new bottom point
                used[y] = True
                layer, x = 0, y

    for a in range(n, 2 * n):  # diagram southern labels
        lab = 2 * n - 1 - a
        if done[lab]:
            continue
        other = trace(1, a)
        out[lab], out[other] = other, lab
        done[lab] = done[other] = True
    for x in range(n, n + S):  # frame top labels
        if done[x]:
            continue
        other = trace(0, x)
        out[x], out[other] = other, x
        done[x] = done[other] = True
    loops = 0
    for j in range(n):
        if used[j]:
            continue
        loops += 1
        used[j] = True
        layer, x = 0, j
        while True:
            y = pairing[x] if layer == 0 else diagram[x]
            if y == j:
                break
            used[y] = True
            layer, x = 1 - layer, y
    return ((bytes(out), n), loops)


# ---------------------------------------------------------------------------
# cell modules


class CellVector:
    """An element of the cell module of a two-column shape, in the basis of
    half diagrams indexed by standard tableaux of that shape."""

    __slots__ = ("shape", "coords")

    def __init__(self, shape, coords=None):
        self.shape = tuple(shape)
        self.coords = {}
        if coords:
            for t, c in coords.items():
                c = Fraction(c)
                if c:
                    self.coords[t] = c

    @classmethod
    def basis_vector(cls, t: Tableau):
        return cls(tableaux.shape_of(t), {t: 1})

    def __add__(self, other):
        assert self.shape == other.shape
        out = dict(self.coords)
        for t, c in other.coords.items():
            new = out.get(t, Fraction(0)) + c
            if new:
                out[t] = new
            else:
                out.pop(t, None)
        return CellVector(self.shape, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return CellVector(self.shape, {t: v * c for t, v in self.coords.items()})

    def __eq__(self, other):
        return isinstance(other, CellVector) and self.shape == other.shape \
            and self.coords == other.coords

    def is_zero(self):
        return not self.coords

    def __repr__(self):
        body = " + ".join(f"{c}*C{list(t)}" for t, c in sorted(self.coords.items()))
        return f"CellVector({self.shape}: {body or '0'})"


def cell_action(v: CellVector, a: TLElement) -> CellVector:
    """Right action of an element on a cell-module vector.  Concatenating a
    half diagram on top of a diagram can join two through strands into a
    top arc; such terms land in a more dominant cell and are zero here."""
    l1, l2 = v.shape
    if l1 + l2 != a.n:
        raise ValueError("strand count mismatch")
    if a.ring == "Fp":
        raise ValueError("cell modules are implemented over Q")
    out = {}
    for t, c in v.coords.items():
        ht = half_diagram(t)
        for d, cd in a.terms.items():
            fr, loops = stack_under(ht, d)
            if frame_has_top_arc(fr):
                continue
            u = frame_to_tableau(fr)
            coeff = c * cd * (1 << loops)
            new = out.get(u, Fraction(0)) + coeff
            if new:
                out[u] = new
            else:
                out.pop(u, None)
    return CellVector(v.shape, out)


def cell_matrix(a: TLElement, shape) -> dict:
    """Matrix of the right action of ``a`` on the cell module of ``shape``:
    entry (w, u) is the coefficient of C_w in C_u * a."""
    mat = {}
    for u in tableaux.standard_tableaux(tuple(shape)):
        img = cell_action(CellVector.basis_vector(u), a)
        for w, c in img.coords.items():
            mat[(w, u)] = c
    return mat


def cell_representation_rank(n: int, q: int = 1_000_003) -> int:
    """Rank mod q of the map sending a diagram to the tuple of its cell-
    module matrices over all shapes.  Full rank (= Catalan(n)) certifies
    that the direct sum of cell modules is a faithful representation."""
    import numpy as np

    diagrams = all_matchings(n)
    shapes = tableaux.two_column_partitions(n)
    columns = []
    for shape in shapes:
        tabs = tableaux.standard_tableaux(shape)
        columns.extend(((shape, w, u) for w in tabs for u in tabs))
    col_index = {key: j for j, key in enumerate(columns)}
    rows = np.zeros((len(diagrams), len(columns)), dtype=np.int64)
    for r, d in enumerate(diagrams):
        elem = TLElement(n, {d: 1})
        for shape in shapes:
            for (w, u), c in cell_matrix(elem, shape).items():
                assert c.denominator == 1
                rows[r, col_index[(shape, w, u)]] = c.numerator % q
    # Gaussian elimination mod q, vectorized row updates
    rank = 0
    m = rows % q
    nrows, ncols = m.shape
    for col in range(ncols):
        pivots = np.nonzero(m[rank:, col])[0]
        if pivots.size == 0:
            continue
        pivot = rank + int(pivots[0])
        m[[rank, pivot]] = m[[pivot, rank]]
        inv = pow(int(m[rank, col]), -1, q)
        m[rank] = m[rank] * inv % q
        factors = m[:, col].copy()
        factors[rank] = 0
        m -= np.outer(factors, m[rank]) % q
        m %= q
        rank += 1
        if rank == nrows:
            break
    return rank
