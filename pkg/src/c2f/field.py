"""Exact characteristic-2 base fields: GF(2^k), GF(2^k)(t) and GF(2^k)((t)).

Elements of all three kinds are stored as reduced fractions of polynomials in
``t`` (a constant numerator for the finite kind).  The Laurent-series field is
modelled by its dense subfield of rational functions, so arithmetic is always
exact; only expansions and Artin-Schreier witnesses carry a precision.
"""

from dataclasses import dataclass, field as dc_field

from . import poly
from .gf2k import MODULI, gf

FINITE, RATFUNC, LOCAL = "finite", "ratfunc", "local"
KINDS = (FINITE, RATFUNC, LOCAL)
DEFAULT_PRECISION = 64


class FieldError(ValueError):
    """Operands from different fields, or an operation undefined for the kind."""


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str
    k: int
    modulus: int
    default_precision: int = dc_field(default=DEFAULT_PRECISION, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FieldError(f"unknown field kind {self.kind!r}")
        if self.modulus.bit_length() - 1 != self.k:
            raise FieldError(f"modulus {bin(self.modulus)} does not have degree {self.k}")
        if self.default_precision < 1:
            raise FieldError("default_precision must be positive")
        gf(self.modulus)  # raises on a reducible modulus

    @classmethod
    def make(cls, kind, k=1, modulus=None, default_precision=DEFAULT_PRECISION):
        if modulus is None:
            if k not in MODULI:
                raise FieldError(f"no built-in modulus for k={k}; pass one explicitly")
            modulus = MODULI[k]
        return cls(kind, k, modulus, default_precision)

    @classmethod
    def local(cls, k=1, modulus=None, default_precision=DEFAULT_PRECISION):
        return cls.make(LOCAL, k, modulus, default_precision)

    @classmethod
    def ratfunc(cls, k=1, modulus=None):
        return cls.make(RATFUNC, k, modulus)

    @classmethod
    def finite(cls, k=1, modulus=None):
        return cls.make(FINITE, k, modulus)

    @property
    def gf(self):
        return gf(self.modulus)

    @property
    def square_degree(self):
        """[F:F^2]."""
        return 1 if self.kind == FINITE else 2

    @property
    def has_t(self):
        return self.kind != FINITE

    def __str__(self):
        tag = {FINITE: "gf"}.get(self.kind, self.kind)
        s = f"{tag}:{self.k}"
        if self.modulus != MODULI.get(self.k):
            s += f":{bin(self.modulus)}"
        return s

    # constructors
    @property
    def zero(self):
        return FieldElem(self, poly.ZERO, poly.ONE, _trusted=True)

    @property
    def one(self):
        return FieldElem(self, poly.ONE, poly.ONE, _trusted=True)

    @property
    def t(self):
        if not self.has_t:
            raise FieldError("the finite field has no variable t")
        return FieldElem(self, poly.T, poly.ONE, _trusted=True)

    def const(self, c):
        if not 0 <= c < (1 << self.k):
            raise FieldError(f"{c} is not an element of GF(2^{self.k})")
        return FieldElem(self, poly.norm((c,)), poly.ONE, _trusted=True)

    def from_poly(self, num, den=poly.ONE):
        return FieldElem(self, poly.norm(num), poly.norm(den))

    def __call__(self, x):
        return self.coerce(x)

    def coerce(self, x):
        if isinstance(x, FieldElem):
            if x.desc != self:
                raise FieldError(f"element of {x.desc} used in {self}")
            return x
        if isinstance(x, int):
            return self.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")


class FieldElem:
    """An exact field element ``num/den`` with ``den`` monic and coprime to ``num``."""

    __slots__ = ("desc", "num", "den")

    def __init__(self, desc, num, den, _trusted=False):
        if not _trusted:
            if not den:
                raise ZeroDivisionError("zero denominator")
            if not desc.has_t and (len(num) > 1 or len(den) > 1):
                raise FieldError("the finite field has no variable t")
            F = desc.gf
            if not num:
                den = poly.ONE
            else:
                g = poly.gcd(F, num, den)
                if g != poly.ONE:
                    num = poly.divmod_(F, num, g)[0]
                    den = poly.divmod_(F, den, g)[0]
                lead = den[-1]
                if lead != 1:
                    inv = F.inv(lead)
                    num = poly.scale(F, num, inv)
                    den = poly.scale(F, den, inv)
        self.desc = desc
        self.num = num
        self.den = den

    # -- plumbing
    def _other(self, y):
        if isinstance(y, FieldElem):
            if y.desc != self.desc:
                raise FieldError(f"descriptor mismatch: {self.desc} vs {y.desc}")
            return y
        if isinstance(y, int):
            return self.desc.const(y)
        return NotImplemented

    def __repr__(self):
        from .printing import format_elem
        return f"FieldElem({format_elem(self)!r}, {self.desc})"

    def __str__(self):
        from .printing import format_elem
        return format_elem(self)

    def __eq__(self, y):
        if isinstance(y, int):
            y = self.desc.const(y) if 0 <= y < (1 << self.desc.k) else None
            if y is None:
                return False
        if not isinstance(y, FieldElem):
            return NotImplemented
        return self.desc == y.desc and self.num == y.num and self.den == y.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    @property
    def is_zero(self):
        return not self.num

    @property
    def is_constant(self):
        return len(self.num) <= 1 and self.den == poly.ONE

    @property
    def bits(self):
        """GF(2^k) value of a constant element."""
        if not self.is_constant:
            raise FieldError(f"{self} is not a constant")
        return self.num[0] if self.num else 0

    # -- ring operations
    def __add__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        if not y.num:
            return self
        if not self.num:
            return y
        F = self.desc.gf
        if self.den == y.den:
            return FieldElem(self.desc, poly.add(self.num, y.num), self.den)
        num = poly.add(poly.mul(F, self.num, y.den), poly.mul(F, y.num, self.den))
        return FieldElem(self.desc, num, poly.mul(F, self.den, y.den))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        if not self.num or not y.num:
            return self.desc.zero
        F = self.desc.gf
        if self.den == poly.ONE and y.den == poly.ONE:
            return FieldElem(self.desc, poly.mul(F, self.num, y.num), poly.ONE, _trusted=True)
        # cross-cancel before multiplying keeps the gcd work small
        g1 = poly.gcd(F, self.num, y.den)
        g2 = poly.gcd(F, y.num, self.den)
        n1, d2 = self.num, y.den
        if g1 != poly.ONE:
            n1, d2 = poly.divmod_(F, n1, g1)[0], poly.divmod_(F, d2, g1)[0]
        n2, d1 = y.num, self.den
        if g2 != poly.ONE:
            n2, d1 = poly.divmod_(F, n2, g2)[0], poly.divmod_(F, d1, g2)[0]
        num = poly.mul(F, n1, n2)
        den = poly.mul(F, d1, d2)
        lead = den[-1]
        if lead != 1:
            inv = F.inv(lead)
            num, den = poly.scale(F, num, inv), poly.scale(F, den, inv)
        return FieldElem(self.desc, num, den, _trusted=True)

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise ZeroDivisionError(f"inverse of zero in {self.desc}")
        return FieldElem(self.desc, self.den, self.num)

    def __truediv__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return self * y.inv()

    def __rtruediv__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return y * self.inv()

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        r, b = self.desc.one, self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def frobenius(self):
        F = self.desc.gf
        return FieldElem(self.desc, poly.square(F, self.num), poly.square(F, self.den), _trusted=True)

    def wp(self):
        """The Artin-Schreier map x^2 + x."""
        return self.frobenius() + self


# -- square structure --------------------------------------------------------

def is_square_sqrt(x):
    """Return ``y`` with ``y*y == x``, or None when ``x`` is not a square."""
    F = x.desc.gf
    if not x.num:
        return x
    # x = num*den / den^2, and squares of polynomials have only even exponents
    r = poly.sqrt(F, poly.mul(F, x.num, x.den))
    if r is None:
        return None
    return FieldElem(x.desc, r, x.den)


def square_decompose(x):
    """Return ``(alpha, beta)`` with ``x == alpha**2 + t*beta**2``."""
    if not x.desc.has_t:
        raise FieldError("square_decompose needs a field with [F:F^2] = 2")
    F = x.desc.gf
    A, B = poly.even_odd(F, poly.mul(F, x.num, x.den))
    return FieldElem(x.desc, A, x.den), FieldElem(x.desc, B, x.den)


# -- t-adic structure --------------------------------------------------------

INF = float("inf")


def valuation(x):
    if not x.num:
        return INF
    return poly.val(x.num) - poly.val(x.den)


def valuation_expand(x, n=None):
    """Return ``(v, coeffs)``: the t-adic valuation and the first ``n`` Laurent
    coefficients starting at ``t^v`` (``n`` defaults to the descriptor precision)."""
    if n is None:
        n = x.desc.default_precision
    if not x.num:
        return INF, []
    F = x.desc.gf
    vn, vd = poly.val(x.num), poly.val(x.den)
    num = x.num[vn:]
    den = x.den[vd:]
    return vn - vd, series_div(F, num, den, n)


def series_div(F, num, den, n):
    """First ``n`` power-series coefficients of num/den, ``den[0] != 0``."""
    inv0 = F.inv(den[0])
    out = []
    for i in range(n):
        c = num[i] if i < len(num) else 0
        for j in range(1, min(i, len(den) - 1) + 1):
            if den[j] and out[i - j]:
                c ^= F.mul(den[j], out[i - j])
        out.append(F.mul(c, inv0))
    return out


def coefficient(x, e):
    """Laurent coefficient of ``t^e`` in the expansion of ``x``."""
    v, _ = valuation_expand(x, 0)
    if v == INF or e < v:
        return 0
    return valuation_expand(x, e - v + 1)[1][e - v]


def derivative(x):
    F = x.desc.gf
    # (n/d)' = (n' d + n d') / d^2
    num = poly.add(poly.mul(F, poly.deriv(x.num), x.den), poly.mul(F, x.num, poly.deriv(x.den)))
    return FieldElem(x.desc, num, poly.mul(F, x.den, x.den))


def residue_dlog(a, b):
    """Res_{t=0}(a * db/b) as a GF(2^k) int."""
    if not b.desc.has_t:
        raise FieldError("residues need a field with a variable t")
    if not b.num:
        raise ZeroDivisionError("residue_dlog: b = 0")
    r = a * derivative(b) / b
    return coefficient(r, -1)


def translate(x, c):
    """Substitute t -> t + c (c a GF(2^k) int); moves the place t = c to t = 0."""
    F = x.desc.gf
    return FieldElem(x.desc, poly.compose_shift(F, x.num, c), poly.compose_shift(F, x.den, c))


def invert_variable(x):
    """Substitute t -> 1/t; moves the place at infinity to t = 0."""
    n = max(poly.degree(x.num), poly.degree(x.den), 0)
    return FieldElem(x.desc, poly.reverse(x.num, n), poly.reverse(x.den, n))


# -- square classes ------------------------------------------------------------

def _odd_part(F, f):
    """Product of the irreducible factors occurring to an odd power in ``f``."""
    # in characteristic 2, gcd(f, f') keeps P^e for even e and P^(e-1) for odd e
    d = poly.deriv(f)
    if not d:
        return poly.ONE
    return poly.monic(F, poly.divmod_(F, f, poly.gcd(F, f, d))[0])


@dataclass(frozen=True)
class SquareClass:
    """The class x*F^{x2}; ``rep`` is the monic squarefree polynomial in the class."""

    desc: FieldDescriptor
    rep: tuple

    @property
    def is_trivial(self):
        return self.rep == poly.ONE

    def element(self):
        return FieldElem(self.desc, self.rep, poly.ONE, _trusted=True)

    def __mul__(self, other):
        return square_class(self.element() * other.element())

    def __str__(self):
        from .printing import format_poly
        return f"{format_poly(self.rep, self.desc.k)} * F^x2"


def square_class(x):
    if not x.num:
        raise ZeroDivisionError("square class of 0")
    if not x.desc.has_t:
        return SquareClass(x.desc, poly.ONE)  # finite fields are perfect
    F = x.desc.gf
    return SquareClass(x.desc, _odd_part(F, poly.mul(F, x.num, x.den)))


def square_class_eq(x, y):
    if not x.num or not y.num:
        raise ZeroDivisionError("square class of 0")
    return is_square_sqrt(x * y) is not None
