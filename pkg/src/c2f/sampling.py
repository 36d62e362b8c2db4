"""Seeded random elements, quaternions and forms for property checks and tables."""

import random

from .forms import HermForm, QuadFormF, QuadFormQ


def rng(seed):
    return random.Random(seed)


def rand_poly(r, desc, deg):
    q = 1 << desc.k
    return [r.randrange(q) for _ in range(deg + 1)]


def rand_elem(r, desc, deg=2, nonzero=False):
    """Random rational function with numerator and denominator of degree <= ``deg``."""
    while True:
        if desc.kind == "finite":
            x = desc.const(r.randrange(1 << desc.k))
        else:
            num = rand_poly(r, desc, deg)
            den = rand_poly(r, desc, deg)
            if not any(den):
                continue
            x = desc.from_poly(num, den)
        if x or not nonzero:
            return x


def rand_quat(r, A, deg=2, nonzero=True):
    while True:
        x = A(*[rand_elem(r, A.desc, deg) for _ in range(4)])
        if x or not nonzero:
            return x


def rand_nonsingular_entry(r, A, deg=2):
    """Quaternion with nonzero reduced trace (a nonsingular slot for gamma)."""
    while True:
        x = rand_quat(r, A, deg)
        if x.trd():
            return x


def rand_ts_entry(r, A, deg=2):
    """Symmetric, non-central quaternion (a totally singular slot for gamma)."""
    z = A.desc.zero
    while True:
        x = A(rand_elem(r, A.desc, deg), z, rand_elem(r, A.desc, deg), rand_elem(r, A.desc, deg))
        if not x.is_scalar:
            return x


def rand_quad_Q(r, base, n, m, deg=2):
    """Diagonal form of type (n, m) over (Q, gamma)."""
    A = base.algebra
    entries = [rand_nonsingular_entry(r, A, deg) for _ in range(n)]
    entries += [rand_ts_entry(r, A, deg) for _ in range(m)]
    r.shuffle(entries)
    return QuadFormQ(base, entries)


def rand_herm_Q(r, base, n, deg=2, kinds=("alt", "sym")):
    A = base.algebra
    entries = []
    for _ in range(n):
        if r.choice(kinds) == "alt":
            entries.append(A.scalar(rand_elem(r, A.desc, deg, nonzero=True)))
        else:
            entries.append(rand_ts_entry(r, A, deg))
    return HermForm(base, entries)


def rand_quad_F(r, desc, blocks, diag, deg=2):
    bl = [(rand_elem(r, desc, deg), rand_elem(r, desc, deg)) for _ in range(blocks)]
    dg = [rand_elem(r, desc, deg, nonzero=True) for _ in range(diag)]
    return QuadFormF(desc, bl, dg)


def rand_bilinear(r, desc, n, deg=2):
    return HermForm(desc, [rand_elem(r, desc, deg, nonzero=True) for _ in range(n)])


def rand_gram(r, base, n, deg=2):
    A = base.algebra
    M = [[rand_quat(r, A, deg, nonzero=False) if c >= row else A.zero for c in range(n)]
         for row in range(n)]
    return QuadFormQ(base, gram=M)
