"""Arf invariants and square classes.

The Arf invariant of a nonsingular quadratic form over (Q, gamma) is a class
in F/wp(F).  Two routes are provided and kept independent: a closed formula
for diagonal forms and the reduced-characteristic-polynomial formula on a
Gram matrix.
"""

from dataclasses import dataclass, field

from .artin_schreier import WpClass, wp_class
from .field import SquareClass, square_class, square_class_eq  # noqa: F401  (re-exported)
from .forms import QuadFormF, QuadFormQ, polar_matrix, to_canonical
from .linalg import inverse, matmul
from .quaternion import matrix_srd


class SingularFormError(ValueError):
    """The Arf invariant needs a nonsingular form."""


@dataclass(frozen=True)
class ArfValue:
    """Arf class of a form; ``source_dim`` and ``transport`` are metadata."""

    cls: WpClass
    source_dim: int = field(default=0, compare=False)
    transport: object = field(default=None, compare=False)

    @property
    def is_trivial(self):
        return self.cls.is_trivial

    def __add__(self, other):
        return ArfValue(self.cls + other.cls, self.source_dim + other.source_dim)

    def to_json(self):
        return self.cls.to_json()

    def __str__(self):
        return str(self.cls)


def arf_diagonal(rho):
    """Arf class of a nonsingular diagonal form over (Q, gamma).

    Each slot ``<a>`` contributes ``Nrd(a)/Trd(a)^2``, which is ``Nrd(a)`` when
    ``Trd(a) = 1`` and makes the class invariant under ``a -> lam*a``.
    """
    if not rho.is_diagonal:
        raise ValueError("arf_diagonal expects a diagonal form")
    if not rho.base.is_canonical:
        raise ValueError("transport the form to the canonical involution first")
    total = rho.desc.zero
    for a in rho.entries:
        tr = a.trd()
        if not tr:
            raise SingularFormError(f"entry {a} is symmetric: the form is singular")
        total = total + a.nrd() / (tr * tr)
    return ArfValue(wp_class(total), rho.dim)


def arf_gram(rho):
    """Arf class from a Gram matrix: class of ``Srd(N^-1 M) + n(n-1)/2``, ``N = M + M*``."""
    transport = None
    if not rho.base.is_canonical:
        transport = rho.base.theta.u
        rho = to_canonical(rho)
    A = rho.base.algebra
    M = rho.gram_matrix()
    n = len(M)
    Ninv = inverse(polar_matrix(rho.base, M), A.zero, A.one)
    if Ninv is None:
        raise SingularFormError("polar Gram matrix is singular")
    s = matrix_srd(matmul(Ninv, M, A.zero))
    if (n * (n - 1) // 2) % 2:
        s = s + rho.desc.one
    return ArfValue(wp_class(s), n, transport)


def arf(rho):
    """Arf class of any nonsingular quadratic form over (Q, theta) or over F."""
    if isinstance(rho, QuadFormF):
        return arf_F(rho)
    if not rho.base.is_canonical:
        u = rho.base.theta.u
        v = arf(to_canonical(rho))
        return ArfValue(v.cls, v.source_dim, u)
    if rho.is_diagonal:
        return arf_diagonal(rho)
    return arf_gram(rho)


def arf_F(rho):
    """Arf class of ``perp [b_i, c_i]``: the class of ``sum b_i c_i``."""
    if not isinstance(rho, QuadFormF):
        raise TypeError("arf_F expects a quadratic form over F")
    if rho.diag:
        raise SingularFormError("arf_F needs a nonsingular form (empty diagonal part)")
    total = rho.desc.zero
    for b, c in rho.blocks:
        total = total + b * c
    return ArfValue(wp_class(total), rho.dim)


__all__ = ["ArfValue", "SingularFormError", "arf", "arf_F", "arf_diagonal", "arf_gram",
           "SquareClass", "square_class", "square_class_eq", "QuadFormQ"]
