"""Hermitian and generalised quadratic forms over (Q, theta) and quadratic forms over F.

Vectors are lists of coordinates; quaternion scalars act on the right, so
``q(x*l) = theta(l) q(x) l``.  A quadratic form over (Q, theta) takes values in
Q/Alt(Q, theta): a vector is isotropic when its value lies in Alt.

Three containers are used:

* :class:`HermForm` -- diagonal hermitian form over (Q, theta), or a diagonal
  symmetric bilinear form over F (``base`` is then a FieldDescriptor);
* :class:`QuadFormQ` -- generalised quadratic form over (Q, theta), given by a
  diagonal or by an upper-triangular Gram matrix;
* :class:`QuadFormF` -- quadratic form over F written as binary blocks
  ``[b, c] = b x^2 + xy + c y^2`` plus a totally singular diagonal.
"""

from dataclasses import dataclass

from .field import FieldDescriptor
from .quaternion import (ALT, NEITHER, SYM_NOT_ALT, InvolutionDesc, Quaternion,
                         QuaternionAlgebra, classify_sym_alt, is_division)


class FormError(ValueError):
    """A form violates a membership rule; ``rule`` names it."""

    def __init__(self, rule, message):
        super().__init__(f"{message} ({rule})")
        self.rule = rule


@dataclass(frozen=True)
class QBase:
    algebra: QuaternionAlgebra
    theta: InvolutionDesc

    @classmethod
    def canonical(cls, algebra):
        return cls(algebra, InvolutionDesc.canonical(algebra))

    @property
    def desc(self):
        return self.algebra.desc

    @property
    def is_canonical(self):
        return self.theta.u == self.algebra.one

    def classify(self, x):
        return classify_sym_alt(self.theta, x)

    def in_alt(self, x):
        return self.classify(x) == ALT

    def in_sym(self, x):
        return self.classify(x) != NEITHER

    def alt_name(self):
        return "Alt(Q,γ)" if self.is_canonical else f"Alt(Q,{self.theta})"

    def sym_name(self):
        return "Sym(Q,γ)" if self.is_canonical else f"Sym(Q,{self.theta})"

    def __str__(self):
        return f"({self.algebra}, {self.theta})"


def _is_field_base(base):
    return isinstance(base, FieldDescriptor)


def _desc(base):
    return base if _is_field_base(base) else base.desc


# -- hermitian forms ---------------------------------------------------------------

class HermForm:
    """Diagonal hermitian form ``<a_1, ..., a_n>^h``.

    Entries are theta-symmetric; zero entries are only allowed with
    ``degenerate=True`` (radical slots of a polar form).
    """

    kind = "herm"

    def __init__(self, base, entries, degenerate=False):
        entries = tuple(entries)
        if _is_field_base(base):
            entries = tuple(base.coerce(e) for e in entries)
        else:
            entries = tuple(e if isinstance(e, Quaternion) else base.algebra.scalar(e)
                            for e in entries)
            for e in entries:
                if e.algebra != base.algebra:
                    raise FormError("same algebra", "entry from another algebra")
                if e and not base.in_sym(e):
                    raise FormError("symmetric entries", f"entry {e} not in {base.sym_name()}")
        if not degenerate and any(not e for e in entries):
            raise FormError("nonzero entries", "zero diagonal entry")
        self.base = base
        self.entries = entries
        self.degenerate = degenerate

    @property
    def dim(self):
        return len(self.entries)

    @property
    def is_bilinear(self):
        return _is_field_base(self.base)

    @property
    def desc(self):
        return _desc(self.base)

    def entry_in_alt(self, e):
        if self.is_bilinear:
            return not e  # Alt(F, id) = 0
        return self.base.in_alt(e)

    @property
    def is_alternating(self):
        return all(self.entry_in_alt(e) for e in self.entries)

    @property
    def contains_direct_candidate(self):
        return any(e and not self.entry_in_alt(e) for e in self.entries)

    def value(self, xs):
        """h(x, x)."""
        _check_dim(self, xs)
        if self.is_bilinear:
            s = self.desc.zero
            for a, x in zip(self.entries, xs):
                s = s + a * x * x
            return s
        theta = self.base.theta
        s = self.base.algebra.zero
        for a, x in zip(self.entries, xs):
            s = s + theta(x) * a * x
        return s

    def __eq__(self, other):
        return (isinstance(other, HermForm) and self.base == other.base
                and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        from .printing import format_form
        return format_form(self)

    __repr__ = __str__


# -- quadratic forms over (Q, theta) -------------------------------------------

class QuadFormQ:
    """Generalised quadratic form over (Q, theta), diagonal or by Gram matrix."""

    kind = "quad"

    def __init__(self, base, entries=None, gram=None):
        if (entries is None) == (gram is None):
            raise ValueError("give exactly one of entries or gram")
        self.base = base
        if entries is not None:
            entries = tuple(entries)
            for e in entries:
                if not isinstance(e, Quaternion) or e.algebra != base.algebra:
                    raise FormError("same algebra", f"entry {e} is not in the algebra")
                if base.in_alt(e):
                    raise FormError("entries outside Alt", f"entry in {base.alt_name()}")
            self.entries = entries
            self.gram = None
        else:
            self.entries = None
            self.gram = canonical_gram(base, gram)

    @property
    def desc(self):
        return self.base.desc

    @property
    def is_diagonal(self):
        return self.entries is not None

    @property
    def dim(self):
        return len(self.entries) if self.is_diagonal else len(self.gram)

    def gram_matrix(self):
        if not self.is_diagonal:
            return [list(r) for r in self.gram]
        z = self.base.algebra.zero
        n = self.dim
        return [[self.entries[r] if r == c else z for c in range(n)] for r in range(n)]

    @property
    def type(self):
        """``(n, m)``: nonsingular and totally singular dimensions."""
        if not self.is_diagonal:
            return diagonalize_gram(self).form.type
        m = sum(1 for e in self.entries if self.base.classify(e) == SYM_NOT_ALT)
        return (self.dim - m, m)

    @property
    def is_nonsingular(self):
        return self.type[1] == 0

    @property
    def is_totally_singular(self):
        return self.type[0] == 0

    def value(self, xs):
        """A representative of q(x) in Q (the class mod Alt is what matters)."""
        _check_dim(self, xs)
        theta = self.base.theta
        if self.is_diagonal:
            s = self.base.algebra.zero
            for a, x in zip(self.entries, xs):
                if x:
                    s = s + theta(x) * a * x
            return s
        return gram_value(self.base, self.gram, xs)

    def is_zero_value(self, xs):
        return self.base.in_alt(self.value(xs))

    def __eq__(self, other):
        return (isinstance(other, QuadFormQ) and self.base == other.base
                and self.entries == other.entries and self.gram == other.gram)

    def __hash__(self):
        return hash((self.entries, None if self.gram is None else tuple(map(tuple, self.gram))))

    def __str__(self):
        from .printing import format_form
        return format_form(self)

    __repr__ = __str__


def canonical_gram(base, M):
    """Upper-triangular Gram matrix defining the same quadratic form.

    ``theta(x_s) m x_r`` and ``theta(x_r) theta(m) x_s`` differ by an element of
    Alt, so a lower entry ``m`` at (s, r) moves to (r, s) as ``theta(m)``.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("Gram matrix must be square")
    theta = base.theta
    out = [list(row) for row in M]
    for r in range(n):
        for s in range(r):
            if out[r][s]:
                out[s][r] = out[s][r] + theta(out[r][s])
                out[r][s] = base.algebra.zero
    return tuple(tuple(row) for row in out)


def gram_value(base, M, xs):
    theta = base.theta
    s = base.algebra.zero
    n = len(M)
    for r in range(n):
        if not xs[r]:
            continue
        tx = theta(xs[r])
        for c in range(n):
            if M[r][c] and xs[c]:
                s = s + tx * M[r][c] * xs[c]
    return s


def polar_matrix(base, M):
    """``N = M + M*`` with ``(M*)_{rs} = theta(M_{sr})``."""
    theta = base.theta
    n = len(M)
    return [[M[r][c] + theta(M[c][r]) for c in range(n)] for r in range(n)]


def polar_value(base, N, xs, ys):
    theta = base.theta
    s = base.algebra.zero
    for r, x in enumerate(xs):
        if not x:
            continue
        tx = theta(x)
        for c, y in enumerate(ys):
            if N[r][c] and y:
                s = s + tx * N[r][c] * y
    return s


# -- quadratic forms over F ----------------------------------------------------

class QuadFormF:
    """Quadratic form ``perp [b_i, c_i] perp <d_1, ..., d_r>`` over F.

    Block coordinates come first (two per block), then the diagonal ones.
    """

    kind = "fquad"

    def __init__(self, desc, blocks=(), diag=()):
        self.desc = desc
        self.blocks = tuple((desc.coerce(b), desc.coerce(c)) for b, c in blocks)
        self.diag = tuple(desc.coerce(d) for d in diag)
        if any(not d for d in self.diag):
            raise FormError("nonzero entries", "zero entry in the totally singular part")

    @property
    def dim(self):
        return 2 * len(self.blocks) + len(self.diag)

    @property
    def is_nonsingular(self):
        return not self.diag

    @property
    def is_totally_singular(self):
        return not self.blocks

    def scaled_blocks(self):
        """Each block as ``(c, d)`` with ``[b, c'] = c*[1, d]``; None for ``b = 0``."""
        return [(b, b * c) if b else None for b, c in self.blocks]

    def value(self, xs):
        _check_dim(self, xs)
        s = self.desc.zero
        for n, (b, c) in enumerate(self.blocks):
            x, y = xs[2 * n], xs[2 * n + 1]
            s = s + b * x * x + x * y + c * y * y
        off = 2 * len(self.blocks)
        for n, d in enumerate(self.diag):
            x = xs[off + n]
            s = s + d * x * x
        return s

    def is_zero_value(self, xs):
        return not self.value(xs)

    def __eq__(self, other):
        return (isinstance(other, QuadFormF) and self.desc == other.desc
                and self.blocks == other.blocks and self.diag == other.diag)

    def __hash__(self):
        return hash((self.blocks, self.diag))

    def __str__(self):
        from .printing import format_form
        return format_form(self)

    __repr__ = __str__


def _check_dim(form, xs):
    if len(xs) != form.dim:
        raise ValueError(f"vector of length {len(xs)} for a form of dimension {form.dim}")


def scaled_block(c, d):
    """``c * [1, d]`` as a block ``[c, d/c]``."""
    return (c, d / c)


# -- constructors ------------------------------------------------------------------

def make_form(base, entries, kind):
    """Validated ``herm``, ``quad`` or ``bilinear`` form from diagonal entries."""
    entries = list(entries)
    if not entries:
        raise FormError("nonempty", "a form needs at least one entry")
    if kind == "herm":
        return HermForm(base, entries)
    if kind == "quad":
        return QuadFormQ(base, entries)
    if kind == "bilinear":
        return HermForm(_desc(base), entries)
    raise ValueError(f"unknown form kind {kind!r}")


def norm_form(Q):
    """``(Q, Nrd) = [1, a] perp b[1, a]``."""
    return QuadFormF(Q.desc, [(Q.desc.one, Q.a), scaled_block(Q.b, Q.a)])


def pfister_bilinear(params, desc=None):
    """``<<b_1, ..., b_m>> = <1, b_1> x ... x <1, b_m>`` as a diagonal bilinear form."""
    params = list(params)
    if desc is None:
        if not params:
            raise ValueError("pass desc for the 0-fold form")
        desc = params[0].desc
    if any(not p for p in params):
        raise FormError("nonzero entries", "zero Pfister parameter")
    entries = [desc.one]
    for p in params:
        entries = [e * f for e in entries for f in (desc.one, p)]
    return HermForm(desc, entries)


def pfister_quadratic(params, c, desc=None):
    """``<<b_1, ..., b_m, c]]``: blocks ``e*[1, c]`` over the bilinear Pfister entries ``e``."""
    desc = desc or c.desc
    return QuadFormF(desc, [scaled_block(e, c) for e in pfister_bilinear(params, desc).entries])


# -- operations ----------------------------------------------------------------------

def polar_form(rho):
    """``<b_1 + theta(b_1), ...>^h``; zero entries mark the radical."""
    if not rho.is_diagonal:
        raise ValueError("polar_form expects a diagonal form")
    theta = rho.base.theta
    return HermForm(rho.base, [b + theta(b) for b in rho.entries], degenerate=True)


def type_decompose(rho):
    """``(nonsingular part, totally singular part)`` of a quadratic form over (Q, theta)."""
    if not rho.is_diagonal:
        rho = diagonalize_gram(rho).form
    ns = [e for e in rho.entries if rho.base.classify(e) == NEITHER]
    ts = [e for e in rho.entries if rho.base.classify(e) == SYM_NOT_ALT]
    return QuadFormQ(rho.base, ns), QuadFormQ(rho.base, ts)


def orth_sum(f1, f2):
    if type(f1) is not type(f2):
        raise FormError("same kind", "orthogonal sum of forms of different kinds")
    if isinstance(f1, QuadFormF):
        if f1.desc != f2.desc:
            raise FormError("same base", "forms over different fields")
        return QuadFormF(f1.desc, f1.blocks + f2.blocks, f1.diag + f2.diag)
    if f1.base != f2.base:
        raise FormError("same base", "forms over different bases")
    if isinstance(f1, HermForm):
        return HermForm(f1.base, f1.entries + f2.entries, f1.degenerate or f2.degenerate)
    if f1.is_diagonal and f2.is_diagonal:
        return QuadFormQ(f1.base, f1.entries + f2.entries)
    z = f1.base.algebra.zero
    A, B = f1.gram_matrix(), f2.gram_matrix()
    n, m = len(A), len(B)
    M = [A[r] + [z] * m for r in range(n)] + [[z] * n + B[r] for r in range(m)]
    return QuadFormQ(f1.base, gram=M)


def scale(f, lam):
    """``lam * f`` for ``lam`` in F^x."""
    if not lam:
        raise FormError("nonzero scalar", "scaling by 0")
    if isinstance(f, QuadFormF):
        return QuadFormF(f.desc, [(lam * b, c / lam) for b, c in f.blocks],
                         [lam * d for d in f.diag])
    if isinstance(f, HermForm):
        return HermForm(f.base, [e * lam for e in f.entries], f.degenerate)
    if f.is_diagonal:
        return QuadFormQ(f.base, [e * lam for e in f.entries])
    return QuadFormQ(f.base, gram=[[e * lam for e in row] for row in f.gram])


def transport(f, theta):
    """Re-express ``f`` over (Q, theta): multiply on the left by ``u_theta u_f^-1``.

    If ``f`` lives over (Q, Int(u1) o gamma), then ``(u2 u1^-1) f`` is a form of the
    same kind over (Q, Int(u2) o gamma) with the same isotropy and singularity.
    """
    base = f.base
    if theta.algebra != base.algebra:
        raise FormError("same algebra", "transport target uses another algebra")
    w = theta.u * base.theta.u.inv()
    new = QBase(base.algebra, theta)
    if isinstance(f, HermForm):
        return HermForm(new, [w * e for e in f.entries], f.degenerate)
    if f.is_diagonal:
        return QuadFormQ(new, [w * e for e in f.entries])
    return QuadFormQ(new, gram=[[w * e for e in row] for row in f.gram])


def to_canonical(f):
    """Transport a form over (Q, theta) to (Q, gamma)."""
    if f.base.is_canonical:
        return f
    return transport(f, InvolutionDesc.canonical(f.base.algebra))


def sum_scale(f1, f2=None, lam=None, u_transport=None):
    out = f1
    if f2 is not None:
        out = orth_sum(out, f2)
    if lam is not None:
        out = scale(out, lam)
    if u_transport is not None:
        out = transport(out, u_transport)
    return out


def tensor_bilinear(phi, psi):
    """``<c_1..c_r> (x) <a_1..a_s>`` with entries ``c_i a_j`` in (i, j) order."""
    if not phi.is_bilinear:
        raise FormError("bilinear left factor", "left factor must be a form over F")
    entries = [a * c for c in phi.entries for a in psi.entries]
    if isinstance(psi, HermForm):
        return HermForm(psi.base, entries, psi.degenerate)
    if isinstance(psi, QuadFormQ) and psi.is_diagonal:
        return QuadFormQ(psi.base, entries)
    raise FormError("diagonal right factor", "right factor must be diagonal")


@dataclass(frozen=True)
class AssociatedTS:
    """Totally singular form ``x -> h(x, x) + Alt``; ``witness`` marks an entry in Alt."""

    form: QuadFormQ
    witness: tuple = None

    @property
    def is_marked_isotropic(self):
        return self.witness is not None


def associated_totally_singular(phi):
    if phi.is_bilinear:
        raise FormError("quaternion base", "associated form needs a base (Q, theta)")
    A = phi.base.algebra
    keep = [e for e in phi.entries if e and not phi.base.in_alt(e)]
    witness = None
    for n, e in enumerate(phi.entries):
        if not e or phi.base.in_alt(e):
            witness = tuple(A.one if m == n else A.zero for m in range(phi.dim))
            break
    return AssociatedTS(QuadFormQ(phi.base, keep), witness)


def trace_form_F(phi):
    """The F-form ``x -> h(x, x)`` of an alternating hermitian form over (Q, gamma).

    For ``<c>^h`` this is ``c * Nrd``, i.e. ``c[1, a] perp cb[1, a]``.
    """
    if phi.is_bilinear or not phi.is_alternating:
        raise FormError("alternating", "trace form needs an alternating hermitian form")
    phi = to_canonical(phi)
    Q = phi.base.algebra
    blocks = []
    for e in phi.entries:
        c = e.coords[0]
        blocks += [scaled_block(c, Q.a), scaled_block(c * Q.b, Q.a)]
    return QuadFormF(Q.desc, blocks)


def trace_form_coords(phi, xs):
    """Coordinates of the quaternion vector ``xs`` in :func:`trace_form_F` of ``phi``."""
    phi = to_canonical(phi)
    b = phi.base.algebra.b
    out = []
    for e, x in zip(phi.entries, xs):
        c = e.coords[0]
        x0, x1, x2, x3 = x.coords
        out += [x0, c * x1, x2, c * b * x3]
    return out


# -- diagonalisation ----------------------------------------------------------------

class DiagonalizationError(ArithmeticError):
    def __init__(self, message, probe_log):
        super().__init__(message)
        self.probe_log = probe_log


@dataclass
class Diagonalization:
    """Result of :func:`diagonalize_gram`.

    ``basis[n]`` is the original-coordinate vector behind diagonal slot ``n``;
    ``defect`` lists radical vectors whose value lies in Alt (each one is an
    isotropic vector and carries no diagonal slot).
    """

    form: QuadFormQ
    basis: list
    defect: list
    probe_log: list

    @property
    def witness(self):
        return self.defect[0] if self.defect else None

    def lift(self, ys):
        """Original coordinates of a vector given in the diagonal basis."""
        A = self.form.base.algebra
        n = len(self.basis[0]) if self.basis else len(self.defect[0])
        out = [A.zero] * n
        for b, y in zip(self.basis, ys):
            out = [o + c * y for o, c in zip(out, b)]
        return out


PROBE_MULTIPLIERS = ("1", "i", "j", "k", "1+i")


def _multipliers(A):
    return [A.one, A.i, A.j, A.k, A.one + A.i]


def diagonalize_gram(rho, check_division=True):
    """Diagonalise a quadratic form given by a Gram matrix.

    Probe order on the current subspace basis ``b_1..b_r``: the ``b_r``, then
    ``b_r + b_s``, then ``b_r + b_s*w`` for ``w`` in 1, i, j, k, 1+i.  A probe
    with value outside Sym splits off a nonsingular slot with its polar
    complement.  When the polar form vanishes on what remains, every basis
    vector gives a totally singular slot, or a defect vector if its value is
    in Alt.
    """
    base = rho.base
    A = base.algebra
    if check_division:
        res = is_division(A)
        if res.division is not True:
            raise DiagonalizationError(f"diagonalisation needs a division algebra; {A} is {res}", [])
    M = rho.gram_matrix()
    N = polar_matrix(base, M)
    n = len(M)
    zero = A.zero
    cur = [[A.one if r == c else zero for r in range(n)] for c in range(n)]
    entries, basis, defect, log = [], [], [], []

    def q(v):
        return gram_value(base, M, v)

    def h(v, w):
        return polar_value(base, N, v, w)

    def probes(B):
        for v in B:
            yield v
        for r in range(len(B)):
            for s in range(r + 1, len(B)):
                yield [x + y for x, y in zip(B[r], B[s])]
        for r in range(len(B)):
            for s in range(len(B)):
                if r != s:
                    for w in _multipliers(A):
                        yield [x + y * w for x, y in zip(B[r], B[s])]

    while cur:
        chosen = None
        for v in probes(cur):
            val = q(v)
            if base.classify(val) == NEITHER:
                chosen = v
                break
        if chosen is not None:
            log.append(f"nonsingular slot {q(chosen)}")
            entries.append(q(chosen))
            basis.append(chosen)
            cs = [h(chosen, b) for b in cur]
            p = next(i for i, c in enumerate(cs) if c)
            cp_inv = cs[p].inv()
            cur = [[x + y * (cp_inv * cs[l]) for x, y in zip(cur[l], cur[p])]
                   for l in range(len(cur)) if l != p]
            continue
        if any(h(v, w) for v in cur for w in cur):
            log.append("probe schedule exhausted with nonzero polar form")
            raise DiagonalizationError("no probe vector with value outside Sym", log)
        for v in cur:
            val = q(v)
            if base.in_alt(val):
                log.append("radical vector with value in Alt")
                defect.append(v)
            else:
                log.append(f"totally singular slot {val}")
                entries.append(val)
                basis.append(v)
        cur = []
    return Diagonalization(QuadFormQ(base, entries), basis, defect, log)
