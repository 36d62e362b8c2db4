"""Quaternion algebras [a,b)_F in characteristic 2.

The basis ``1, i, j, k`` satisfies ``i^2 = i + a``, ``j^2 = b`` and
``k = ij = j + ji``.  Coordinates are FieldElem 4-tuples.  The canonical
(symplectic) involution is ``gamma(x) = Trd(x) - x``; every other involution of
the first kind is ``Int(u) o gamma`` for some ``u`` with ``gamma(u) = u``.
"""

from dataclasses import dataclass

from .artin_schreier import abs_trace
from . import poly
from .field import LOCAL, FieldElem, FieldError, residue_dlog, square_class

SYM_NOT_ALT, ALT, NEITHER = "sym_not_alt", "alt", "neither"


@dataclass(frozen=True)
class QuaternionAlgebra:
    desc: object
    a: FieldElem
    b: FieldElem

    def __post_init__(self):
        if self.a.desc != self.desc or self.b.desc != self.desc:
            raise FieldError("algebra parameters live in a different field")
        if not self.b:
            raise FieldError("b must be nonzero in [a,b)")

    def __call__(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = coords[0]
        if len(coords) != 4:
            raise ValueError("a quaternion has four coordinates")
        return Quaternion(self, tuple(self.desc.coerce(c) for c in coords))

    def scalar(self, c):
        z = self.desc.zero
        return Quaternion(self, (self.desc.coerce(c), z, z, z))

    def basis(self, n):
        o, z = self.desc.one, self.desc.zero
        return Quaternion(self, tuple(o if m == n else z for m in range(4)))

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    @property
    def i(self):
        return self.basis(1)

    @property
    def j(self):
        return self.basis(2)

    @property
    def k(self):
        return self.basis(3)

    def __str__(self):
        return f"[{self.a}, {self.b})_{self.desc}"


class Quaternion:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = coords

    def _other(self, y):
        if isinstance(y, Quaternion):
            if y.algebra != self.algebra:
                raise FieldError("quaternions from different algebras")
            return y
        if isinstance(y, (FieldElem, int)):
            return self.algebra.scalar(y)
        return NotImplemented

    def __add__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return Quaternion(self.algebra, tuple(p + q for p, q in zip(self.coords, y.coords)))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, y):
        if isinstance(y, (FieldElem, int)):
            c = self.algebra.desc.coerce(y)
            return Quaternion(self.algebra, tuple(p * c for p in self.coords))
        y = self._other(y)
        if y is NotImplemented:
            return y
        a, b = self.algebra.a, self.algebra.b
        x0, x1, x2, x3 = self.coords
        y0, y1, y2, y3 = y.coords
        # expansion of the basis products i*i = a+i, i*j = k, i*k = aj+k,
        # j*i = j+k, j*j = b, j*k = b+bi, k*i = aj, k*j = bi, k*k = ab
        x3y3 = x3 * y3
        c0 = x0 * y0 + a * (x1 * y1) + b * (x2 * y2 + x2 * y3 + a * x3y3)
        c1 = x0 * y1 + x1 * y0 + x1 * y1 + b * (x2 * y3 + x3 * y2)
        c2 = x0 * y2 + x2 * y0 + x2 * y1 + a * (x1 * y3 + x3 * y1)
        c3 = x0 * y3 + x3 * y0 + x1 * y2 + x1 * y3 + x2 * y1
        return Quaternion(self.algebra, (c0, c1, c2, c3))

    def __rmul__(self, y):
        if isinstance(y, (FieldElem, int)):
            return self * y
        return NotImplemented

    def __truediv__(self, y):
        if isinstance(y, (FieldElem, int)):
            return self * self.algebra.desc.coerce(y).inv()
        return self * y.inv()

    def __pow__(self, e):
        r = self.algebra.one
        for _ in range(e):
            r = r * self
        return r

    def __eq__(self, y):
        if isinstance(y, (FieldElem, int)):
            y = self.algebra.scalar(y)
        if not isinstance(y, Quaternion):
            return NotImplemented
        return self.algebra == y.algebra and self.coords == y.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"Quaternion({self})"

    def __str__(self):
        from .printing import format_quat
        return format_quat(self)

    @property
    def is_scalar(self):
        return not (self.coords[1] or self.coords[2] or self.coords[3])

    def trd(self):
        return self.coords[1]

    def nrd(self):
        a, b = self.algebra.a, self.algebra.b
        x0, x1, x2, x3 = self.coords
        return x0 * x0 + x0 * x1 + a * (x1 * x1) + b * (x2 * x2 + x2 * x3 + a * (x3 * x3))

    def conj(self):
        """The canonical involution gamma."""
        x0, x1, x2, x3 = self.coords
        return Quaternion(self.algebra, (x0 + x1, x1, x2, x3))

    def inv(self):
        n = self.nrd()
        if not n:
            raise ZeroDivisionError(f"{self} has reduced norm 0")
        return self.conj() * n.inv()


def reduced_invariants(x):
    """``(Trd(x), Nrd(x))``."""
    return x.trd(), x.nrd()


def canonical_involution(x):
    return x.conj()


# -- involutions ---------------------------------------------------------------

@dataclass(frozen=True)
class InvolutionDesc:
    """The involution ``Int(u) o gamma: x -> u gamma(x) u^-1``; ``u = 1`` is gamma."""

    u: Quaternion

    def __post_init__(self):
        if not self.u:
            raise ValueError("involution unit must be nonzero")
        if self.u.conj() != self.u:
            raise ValueError(f"{self.u} is not gamma-symmetric")
        if not self.u.nrd():
            raise ValueError(f"{self.u} is not invertible")

    @classmethod
    def canonical(cls, algebra):
        return cls(algebra.one)

    @property
    def algebra(self):
        return self.u.algebra

    @property
    def is_canonical(self):
        return self.u.is_scalar

    @property
    def kind(self):
        return "symplectic" if self.u.is_scalar else "orthogonal"

    def __call__(self, x):
        return self.u * x.conj() * self.u.inv()

    def to_canonical(self, x):
        """``u^-1 x``: transports Sym/Alt membership for this involution to gamma."""
        return self.u.inv() * x

    def __str__(self):
        return "gamma" if self.u == self.algebra.one else f"Int({self.u}) o gamma"


def classify_sym_alt(theta, x):
    """One of ``alt``, ``sym_not_alt``, ``neither`` for ``x`` under ``theta``."""
    y = theta.to_canonical(x) if not theta.u == theta.algebra.one else x
    if y.is_scalar:
        return ALT
    if not y.coords[1]:
        return SYM_NOT_ALT
    return NEITHER


def det_involution(theta):
    """Square class of the determinant of an orthogonal involution."""
    if theta.u.is_scalar:
        raise ValueError("the determinant is only defined here for orthogonal involutions")
    return square_class(theta.u.nrd())


# -- splitting and symbols ---------------------------------------------------------

def hilbert_symbol(a, b):
    """``Tr Res(a db/b)``: 1 when [a,b) is a division algebra, 0 when it splits."""
    if a.desc.kind != LOCAL:
        raise FieldError("the residue symbol is defined here only over GF(2^k)((t))")
    if not b:
        raise ZeroDivisionError("hilbert_symbol: b = 0")
    return abs_trace(residue_dlog(a, b), a.desc)


@dataclass(frozen=True)
class DivisionResult:
    """Outcome of :func:`is_division`, backed by a verdict on the norm form."""

    division: object  # True, False, or None when undecided
    verdict: object

    def __bool__(self):
        return bool(self.division)

    def __str__(self):
        return {True: "division", False: "split", None: "undecided"}[self.division]


def is_division(Q, search_bound=3, witness=False):
    """Decide whether ``Q`` is a division algebra.

    Over GF(2^k)((t)) the residue symbol decides; a norm-form zero is attached
    to split verdicts when ``witness`` is set.  Elsewhere a split verdict needs
    an explicit norm-form zero from bounded search.
    """
    from . import forms, search, verdict as V

    nf = forms.norm_form(Q)
    if Q.desc.kind == LOCAL:
        s = hilbert_symbol(Q.a, Q.b)
        cert = V.Certificate("SymbolRule", {"bit": s})
        theorem = "a quaternion algebra is division iff its norm form is anisotropic"
        if s:
            return DivisionResult(True, V.anisotropic(cert, theorem))
        w = search.search_oracle(nf, search_bound) if witness else None
        return DivisionResult(False, V.isotropic(cert, theorem, w))
    w = search.search_oracle(nf, search_bound)
    if w is not None:
        return DivisionResult(False, V.isotropic(V.Certificate("SearchWitness", {"vector": list(w)}),
                                                 "explicit zero of the norm form", w))
    return DivisionResult(None, V.undecided(search_bound))


class Etale:
    """The quadratic etale algebra L = F[s]/(s^2 + s + a); elements are pairs (x, y) = x + y*s."""

    def __init__(self, a):
        self.a = a
        self.zero = (a.desc.zero, a.desc.zero)
        self.one = (a.desc.one, a.desc.zero)

    def add(self, p, q):
        return (p[0] + q[0], p[1] + q[1])

    def mul(self, p, q):
        x1, y1 = p
        x2, y2 = q
        yy = y1 * y2
        return (x1 * x2 + self.a * yy, x1 * y2 + x2 * y1 + yy)


def split_embedding(x):
    """2x2 matrix over L representing ``x``: i -> diag(s, s+1), j -> [[0, b], [1, 0]]."""
    Q = x.algebra
    b = Q.b
    x0, x1, x2, x3 = x.coords
    return [[(x0, x1), (x2 * b, x3 * b)],
            [(x2 + x3, x3), (x0 + x1, x1)]]


def charpoly_berkowitz(A, ring):
    """Coefficients ``[1, c1, ..., cN]`` of det(X - A), division-free (Berkowitz).

    ``ring`` supplies ``zero``, ``one``, ``add`` and ``mul``; signs vanish in
    characteristic 2.
    """
    N = len(A)
    coeffs = [ring.one]
    for r in range(N):
        C = [A[i][r] for i in range(r)]
        R = [A[r][j] for j in range(r)]
        col = [ring.one, A[r][r]]
        v = C
        for _ in range(r):
            s = ring.zero
            for p, q in zip(R, v):
                s = ring.add(s, ring.mul(p, q))
            col.append(s)
            v = [_dot(ring, A[i][:r], v) for i in range(r)]
        new = []
        for i in range(r + 2):
            s = ring.zero
            for j in range(max(0, i - len(col) + 1), min(i, r) + 1):
                s = ring.add(s, ring.mul(col[i - j], coeffs[j]))
            new.append(s)
        coeffs = new
    return coeffs


def _dot(ring, row, v):
    s = ring.zero
    for p, q in zip(row, v):
        s = ring.add(s, ring.mul(p, q))
    return s


class DescentError(ArithmeticError):
    """A characteristic-polynomial coefficient of a split image failed to lie in F."""


def matrix_srd(M):
    """Second coefficient of the reduced characteristic polynomial of ``M`` in M_n(Q)."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    Q = M[0][0].algebra
    desc = Q.desc
    # Srd(D X) = D^2 Srd(X): clearing denominators keeps the division-free
    # computation inside F[t], away from repeated gcds
    F = desc.gf
    den = poly.ONE
    for row in M:
        for x in row:
            for c in x.coords + (Q.a, Q.b):
                g = poly.gcd(F, den, c.den)
                den = poly.monic(F, poly.mul(F, den, poly.divmod_(F, c.den, g)[0]))
    D = FieldElem(desc, den, poly.ONE)
    L = Etale(Q.a)
    big = [[None] * (2 * n) for _ in range(2 * n)]
    for r in range(n):
        for c in range(n):
            img = split_embedding(M[r][c] * D)
            for dr in range(2):
                for dc in range(2):
                    big[2 * r + dr][2 * c + dc] = img[dr][dc]
    coeffs = charpoly_berkowitz(big, L)
    for e, (_, y) in enumerate(coeffs):
        if y:
            raise DescentError(f"coefficient {e} of the split characteristic polynomial is not in F")
    return coeffs[2][0] / (D * D)


def default_division_algebra(desc):
    """``[c, t)`` with ``c`` the least constant of absolute trace 1: division over GF(2^k)((t))."""
    if not desc.has_t:
        raise FieldError("finite fields carry no quaternion division algebra")
    c = next(c for c in range(1, 1 << desc.k) if abs_trace(c, desc))
    return QuaternionAlgebra(desc, desc.const(c), desc.t)
