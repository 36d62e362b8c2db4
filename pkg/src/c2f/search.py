"""Bounded witness search: an oracle independent of the theorem-backed deciders.

A form of any kind is flattened to ``N`` unknowns over F (four per quaternion
coordinate) and a list of F-valued quadratic forms ("components") that must
all vanish at an isotropic vector.  Isotropy is invariant under scaling by
F^x, so only polynomial vectors are enumerated, with denominators cleared from
the component coefficients.

Enumeration order.  Unknowns ``1..N-1`` run over polynomial vectors ordered
by total degree, where a nonzero polynomial of degree ``d`` costs ``d + 1``
and zero costs 0; within one total, cost tuples go in lexicographic order and
polynomials in increasing coefficient order.  The first nonzero polynomial is
taken monic (constant scaling).  Unknown 0 is then solved exactly in F from
one component (linear, square root or Artin-Schreier case) and the candidate
is checked against every component.  The first vector that passes is
returned, so the result is deterministic.
"""

import time
from itertools import product

from . import poly
from .artin_schreier import wp_solve_rational
from .field import FieldElem, is_square_sqrt
from .forms import HermForm, QuadFormF, QuadFormQ
from .gf2k import clmul


def form_values(form):
    """``(N, evaluate)``: number of F-unknowns and a map to the component values."""
    if isinstance(form, QuadFormF) or (isinstance(form, HermForm) and form.is_bilinear):
        return form.dim, lambda xs: [form.value(xs)]
    A = form.base.algebra
    n = form.dim
    if isinstance(form, HermForm):
        def evaluate(xs):
            return list(form.value(_quats(A, xs, n)).coords)
    else:
        uinv = form.base.theta.u.inv()
        canonical = form.base.is_canonical

        def evaluate(xs):
            v = form.value(_quats(A, xs, n))
            if not canonical:
                v = uinv * v
            return list(v.coords[1:])
    return 4 * n, evaluate


def _quats(A, xs, n):
    return [A(*xs[4 * m:4 * m + 4]) for m in range(n)]


def group_witness(form, xs):
    """Shape a flat F-vector as a witness for ``form``."""
    if isinstance(form, (QuadFormQ,)) or (isinstance(form, HermForm) and not form.is_bilinear):
        return _quats(form.base.algebra, xs, form.dim)
    return list(xs)


def verify_witness(form, vector):
    """True when ``vector`` is a nonzero isotropic vector of ``form``."""
    if len(vector) != form.dim:
        raise ValueError(f"witness of length {len(vector)} for a form of dimension {form.dim}")
    if not any(vector):
        return False
    if isinstance(form, QuadFormQ):
        return form.is_zero_value(vector)
    return not form.value(vector)


def quadratic_components(form):
    """Coefficient tables ``c[p][r]`` (p <= r) of each component, as polynomials.

    Each table is multiplied by a common denominator, so vanishing is
    unchanged and evaluation stays in F[t].
    """
    desc = form.desc
    N, evaluate = form_values(form)
    zero, one = desc.zero, desc.one

    def unit(*idx):
        v = [zero] * N
        for i in idx:
            v[i] = v[i] + one
        return v

    diag = [evaluate(unit(p)) for p in range(N)]
    ncomp = len(diag[0])
    tables = [dict() for _ in range(ncomp)]
    for p in range(N):
        for r in range(p, N):
            vals = diag[p] if p == r else [
                s + diag[p][c] + diag[r][c] for c, s in enumerate(evaluate(unit(p, r)))]
            for c in range(ncomp):
                if vals[c]:
                    tables[c][(p, r)] = vals[c]
    F = desc.gf
    out = []
    for tab in tables:
        if not tab:
            continue
        den = poly.ONE
        for v in tab.values():
            den = _lcm(F, den, v.den)
        out.append({key: poly.mul(F, v.num, poly.divmod_(F, den, v.den)[0]) for key, v in tab.items()})
    return N, out


def _lcm(F, a, b):
    g = poly.gcd(F, a, b)
    return poly.monic(F, poly.mul(F, a, poly.divmod_(F, b, g)[0]))


class _Ring:
    """Polynomials over GF(2^k); packed into ints when k = 1 for speed."""

    def __init__(self, desc):
        self.desc = desc
        self.F = desc.gf
        self.k = desc.k
        self.packed = desc.k == 1

    def enc(self, p):
        if self.packed:
            return sum(c << i for i, c in enumerate(p))
        return p

    def dec(self, p):
        if self.packed:
            return tuple((p >> i) & 1 for i in range(p.bit_length()))
        return p

    def add(self, a, b):
        return a ^ b if self.packed else poly.add(a, b)

    def mul(self, a, b):
        return clmul(a, b) if self.packed else poly.mul(self.F, a, b)

    @property
    def zero(self):
        return 0 if self.packed else poly.ZERO

    def of_cost(self, c, monic):
        """Polynomials of degree ``c - 1`` in increasing coefficient order."""
        if c == 0:
            yield self.zero
            return
        if self.packed:
            yield from range(1 << (c - 1), 1 << c)
            return
        q = 1 << self.k
        leads = [1] if monic else range(1, q)
        for lead in leads:
            for low in product(range(q), repeat=c - 1):
                yield tuple(reversed(low)) + (lead,)


def _compositions(total, parts):
    """Tuples of ``parts`` nonnegative ints summing to ``total``, lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def search_oracle(form, bound, deadline=None):
    """First witness (exact, in form coordinates) with total degree <= ``bound``, or None."""
    it = iter_witnesses(form, bound, deadline)
    return next(it, None)


def iter_witnesses(form, bound, deadline=None):
    desc = form.desc
    N, comps = quadratic_components(form)
    if not comps:
        # every component vanishes identically: any nonzero vector works
        v = [desc.zero] * N
        v[0] = desc.one
        yield group_witness(form, v)
        return
    R = _Ring(desc)
    tabs = [{key: R.enc(v) for key, v in tab.items()} for tab in comps]
    m = N - 1

    # unknown 0 alone
    if all((0, 0) not in tab for tab in tabs):
        v = [desc.zero] * N
        v[0] = desc.one
        yield group_witness(form, v)

    for total in range(1, bound + 1):
        if m == 0:
            break
        for costs in _compositions(total, m):
            if deadline is not None and time.monotonic() > deadline:
                return
            first = next(i for i, c in enumerate(costs) if c)
            choices = [R.of_cost(c, i == first) for i, c in enumerate(costs)]
            nz = [i + 1 for i, c in enumerate(costs) if c]
            for combo in product(*[list(ch) for ch in choices]):
                x = {i + 1: p for i, p in enumerate(combo) if costs[i]}
                sol = _solve_first(R, tabs, x, nz)
                if sol is None:
                    continue
                P, D = sol
                vec = [desc.zero] * N
                vec[0] = FieldElem(desc, P, poly.ONE)
                for i, p in x.items():
                    vec[i] = FieldElem(desc, poly.mul(desc.gf, R.dec(p), D), poly.ONE)
                w = group_witness(form, vec)
                if verify_witness(form, w):
                    yield w


def _coeffs(R, tab, x, nz):
    """``(alpha, beta, gamma)`` of a component as a quadratic in unknown 0."""
    alpha = tab.get((0, 0), R.zero)
    beta = R.zero
    gamma = R.zero
    for a, p in enumerate(nz):
        c = tab.get((0, p))
        if c:
            beta = R.add(beta, R.mul(c, x[p]))
        xp = x[p]
        for r in nz[a:]:
            c = tab.get((p, r))
            if c:
                gamma = R.add(gamma, R.mul(c, R.mul(xp, x[r])))
    return alpha, beta, gamma


def _solve_first(R, tabs, x, nz):
    """Solve unknown 0 as ``P/D`` (polynomials, D monic) from all components, or None."""
    desc = R.desc
    F = desc.gf
    cands = None
    quads = []
    for tab in tabs:
        al, be, ga = _coeffs(R, tab, x, nz)
        quads.append((al, be, ga))
        if cands is not None:
            continue
        al_, be_, ga_ = R.dec(al), R.dec(be), R.dec(ga)
        if not al_ and not be_:
            if ga_:
                return None
            continue
        cands = _roots(desc, al_, be_, ga_)
        if not cands:
            return None
    if cands is None:
        cands = [desc.zero]
    for X in cands:
        P, D = X.num, X.den
        ok = True
        for al, be, ga in quads:
            # al P^2 + be P D + ga D^2 == 0
            s = poly.add(poly.add(poly.mul(F, R.dec(al), poly.square(F, P)),
                                  poly.mul(F, R.dec(be), poly.mul(F, P, D))),
                         poly.mul(F, R.dec(ga), poly.square(F, D)))
            if s:
                ok = False
                break
        if ok:
            return P, D
    return None


def _roots(desc, al, be, ga):
    """Roots in F of ``al X^2 + be X + ga`` (not all of al, be zero)."""
    A = FieldElem(desc, al, poly.ONE) if al else desc.zero
    B = FieldElem(desc, be, poly.ONE) if be else desc.zero
    G = FieldElem(desc, ga, poly.ONE) if ga else desc.zero
    if not A:
        return [G / B]
    if not B:
        r = is_square_sqrt(G / A)
        return [] if r is None else [r]
    # X = (be/al) Y with Y^2 + Y = al ga / be^2
    y = wp_solve_rational(A * G / (B * B))
    if y is None:
        return []
    s = B / A
    return [s * y, s * (y + desc.one)]
