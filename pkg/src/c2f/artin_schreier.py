"""Artin-Schreier machinery: the map x -> x^2 + x and the quotient F/wp(F).

The quotient of GF(2^k)((t)) by wp(F) has a canonical basis: odd negative
powers of t with arbitrary GF(2^k) coefficients, plus a single bit for the
constant term (its absolute trace).  :func:`wp_class` reduces an element to
that representative.
"""

from dataclasses import dataclass

from . import poly
from .field import (FieldElem, FieldError, INF, LOCAL, RATFUNC, FINITE, valuation,
                    valuation_expand)
from .gf2k import solve_gf2


class WpClassUndetermined(FieldError):
    """The class in F/wp(F) of a rational function is not fixed by data at t = 0."""


def abs_trace(c, desc=None):
    """Absolute trace GF(2^k) -> GF(2) of a constant (FieldElem or int with ``desc``)."""
    if isinstance(c, FieldElem):
        desc, c = c.desc, c.bits
    return desc.gf.trace(c)


@dataclass(frozen=True)
class WpClass:
    """Canonical representative of a class in F/wp(F).

    ``principal`` holds ``(exponent, coefficient)`` pairs, exponents odd,
    negative and strictly decreasing; ``const_bit`` is the trace of the
    constant term.
    """

    principal: tuple = ()
    const_bit: int = 0

    def __post_init__(self):
        exps = [e for e, _ in self.principal]
        if any(e >= 0 or e % 2 == 0 for e in exps) or exps != sorted(set(exps), reverse=True):
            raise ValueError(f"malformed principal part {self.principal}")
        if any(c == 0 for _, c in self.principal) or self.const_bit not in (0, 1):
            raise ValueError("zero coefficient or bad constant bit")

    @property
    def is_trivial(self):
        return not self.principal and not self.const_bit

    def __add__(self, other):
        acc = dict(self.principal)
        for e, c in other.principal:
            acc[e] = acc.get(e, 0) ^ c
        principal = tuple(sorted(((e, c) for e, c in acc.items() if c), reverse=True))
        return WpClass(principal, self.const_bit ^ other.const_bit)

    def to_json(self):
        return {"principal": [[e, c] for e, c in self.principal], "bit": self.const_bit}

    @classmethod
    def from_json(cls, d):
        return cls(tuple((int(e), int(c)) for e, c in d["principal"]), int(d["bit"]))

    def __str__(self):
        if self.is_trivial:
            return "0 + wp(F)"
        terms = [f"{bin(c) if c > 1 else c}*t^{e}" for e, c in self.principal]
        if self.const_bit:
            terms.append("c0 (Tr = 1)")
        return " + ".join(terms) + " + wp(F)"


TRIVIAL = WpClass()


def _reduce_local(c):
    """Reduction data of a local-field element.

    Returns ``(y_terms, d)`` where ``y_terms`` maps exponents to the
    coefficients of the removed wp-preimage and ``d`` holds the reduced
    Laurent coefficients from ``valuation(c)`` up to 0.
    """
    F = c.desc.gf
    v = valuation(c)
    if v == INF or v >= 1:
        return {}, {0: 0}
    _, coeffs = valuation_expand(c, -v + 1)
    d = {v + i: a for i, a in enumerate(coeffs)}
    y = {}
    for e in range(v, 0):
        a = d[e]
        if a and e % 2 == 0:
            s = F.sqrt(a)
            d[e] = 0
            d[e // 2] ^= s
            y[e // 2] = y.get(e // 2, 0) ^ s
    return y, d


def wp_class(c):
    """Canonical class of ``c`` in F/wp(F)."""
    desc = c.desc
    if desc.kind == FINITE:
        return WpClass((), desc.gf.trace(c.bits))
    if desc.kind == RATFUNC:
        if wp_solve_rational(c) is not None:
            return TRIVIAL
        # elements of GF(2^k)[1/t] reduce globally exactly as they do at t = 0
        nt = len(c.den) - 1
        if c.den != (0,) * nt + (1,) or poly.degree(c.num) > nt:
            raise WpClassUndetermined(
                f"class of {c} in GF(2^k)(t)/wp is not determined at t = 0")
    F = desc.gf
    _, d = _reduce_local(c)
    principal = tuple((e, d[e]) for e in sorted(d, reverse=True) if e < 0 and d[e])
    return WpClass(principal, F.trace(d.get(0, 0)))


def wp_solve_rational(c):
    """Exact ``y`` in GF(2^k)(t) with ``y^2 + y = c``, or None if there is none."""
    desc = c.desc
    F = desc.gf
    if not c.num:
        return desc.zero
    if desc.kind == FINITE:
        r = F.wp_root(c.bits)
        return None if r is None else desc.const(r)
    q = poly.sqrt(F, c.den)
    if q is None:
        return None
    N = c.num
    dp = max(poly.degree(q), (poly.degree(N) + 1) // 2)
    k = desc.k
    width = k * (max(2 * dp, dp + poly.degree(q), poly.degree(N)) + 1)

    def pack(p):
        out = 0
        for e, a in enumerate(p):
            out |= a << (e * k)
        return out

    cols = []
    for e in range(dp + 1):
        for bit in range(k):
            p = (0,) * e + (1 << bit,)
            cols.append(pack(poly.add(poly.square(F, p), poly.mul(F, p, q))))
    sol = solve_gf2(cols, pack(N), width)
    if sol is None:
        return None
    p = poly.norm(tuple((sol >> (e * k)) & ((1 << k) - 1) for e in range(dp + 1)))
    return FieldElem(desc, p, q)


# -- truncated Laurent series -------------------------------------------------

@dataclass(frozen=True)
class TruncatedSeries:
    """``sum(coeffs[i] * t^(start+i)) + O(t^precision)`` over GF(2^k)."""

    desc: object
    start: int
    coeffs: tuple
    precision: int

    @classmethod
    def from_elem(cls, x, precision):
        v, co = valuation_expand(x, 0)
        if v == INF or v >= precision:
            return cls(x.desc, precision, (), precision)
        _, co = valuation_expand(x, precision - v)
        return cls(x.desc, v, tuple(co), precision)

    @classmethod
    def from_terms(cls, desc, terms, precision):
        terms = {e: c for e, c in terms.items() if c and e < precision}
        if not terms:
            return cls(desc, precision, (), precision)
        lo = min(terms)
        return cls(desc, lo, tuple(terms.get(e, 0) for e in range(lo, precision)), precision)

    def terms(self):
        return {self.start + i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def valuation(self):
        ts = self.terms()
        return min(ts) if ts else self.precision

    def __add__(self, other):
        if isinstance(other, FieldElem):
            other = TruncatedSeries.from_elem(other, self.precision)
        prec = min(self.precision, other.precision)
        acc = self.terms()
        for e, c in other.terms().items():
            acc[e] = acc.get(e, 0) ^ c
        return TruncatedSeries.from_terms(self.desc, acc, prec)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            v = valuation(other)
            if v == INF:
                return TruncatedSeries(self.desc, 10**9, (), 10**9)
            other = TruncatedSeries.from_elem(other, self.precision - self.valuation + v)
        F = self.desc.gf
        prec = min(self.precision + other.valuation, other.precision + self.valuation)
        acc = {}
        for e1, c1 in self.terms().items():
            for e2, c2 in other.terms().items():
                if e1 + e2 < prec:
                    acc[e1 + e2] = acc.get(e1 + e2, 0) ^ F.mul(c1, c2)
        return TruncatedSeries.from_terms(self.desc, acc, prec)

    __rmul__ = __mul__

    def square(self):
        F = self.desc.gf
        # characteristic 2: (a + O(t^p))^2 = a^2 + O(t^2p)
        acc = {2 * e: F.mul(c, c) for e, c in self.terms().items()}
        return TruncatedSeries.from_terms(self.desc, acc, 2 * self.precision)

    def wp(self):
        return self.square() + self

    def is_zero(self):
        return not any(self.coeffs)

    def agrees_with(self, x):
        """True when ``x`` (element or series) matches this series mod t^precision."""
        return (self + x).is_zero()

    def __str__(self):
        from .printing import format_series
        return format_series(self)


def wp_solve(c, precision=None):
    """Truncated ``x`` with ``x^2 + x = c mod t^precision`` (local kind), or None
    when the class of ``c`` is nontrivial."""
    desc = c.desc
    if desc.kind != LOCAL:
        raise FieldError("wp_solve works over the local field GF(2^k)((t))")
    if precision is None:
        precision = desc.default_precision
    F = desc.gf
    y, d = _reduce_local(c)
    if any(d[e] for e in d if e < 0):
        return None
    z = F.wp_root(d.get(0, 0))
    if z is None:
        return None
    terms = dict(y)
    terms[0] = terms.get(0, 0) ^ z
    v = valuation(c)
    # positive tail: x = T + x^2 converges t-adically since val(T) >= 1
    if precision > 1:
        tail = {}
        if v != INF and v < precision:
            _, co = valuation_expand(c, precision - v)
            tail = {v + i: a for i, a in enumerate(co) if v + i >= 1 and a}
        T = TruncatedSeries.from_terms(desc, tail, precision)
        x = TruncatedSeries(desc, precision, (), precision)
        for _ in range(precision.bit_length() + precision):
            nxt = T + x.square()
            nxt = TruncatedSeries.from_terms(desc, nxt.terms(), precision)
            if nxt.terms() == x.terms():
                break
            x = nxt
        for e, a in x.terms().items():
            terms[e] = terms.get(e, 0) ^ a
    return TruncatedSeries.from_terms(desc, terms, precision)
