"""Independent reference computations used to cross-check the library.

Each oracle takes a different route from the code it checks: Laurent
expansions by plain power-series inversion, Artin-Schreier reduction on
expansion coefficients, and Arf invariants over finite fields by counting
zeros.
"""

from itertools import product

from c2f.artin_schreier import WpClass


def laurent(x, n):
    """``(v, coeffs)``: the first ``n`` Laurent coefficients of ``x`` starting at t^v."""
    F = x.desc.gf
    num, den = list(x.num), list(x.den)
    vn = next(i for i, c in enumerate(num) if c)
    vd = next(i for i, c in enumerate(den) if c)
    num, den = num[vn:], den[vd:]
    # power series inverse of den
    inv = [F.inv(den[0])]
    for m in range(1, n):
        s = 0
        for i in range(1, min(m, len(den) - 1) + 1):
            s ^= F.mul(den[i], inv[m - i])
        inv.append(F.mul(s, inv[0]))
    out = []
    for m in range(n):
        s = 0
        for i in range(min(m, len(num) - 1) + 1):
            s ^= F.mul(num[i], inv[m - i])
        out.append(s)
    return vn - vd, out


def series_terms(x, upto):
    """``{exponent: coefficient}`` for exponents below ``upto``."""
    if not x:
        return {}
    v, co = laurent(x, max(upto - laurent(x, 1)[0], 1))
    return {v + i: c for i, c in enumerate(co) if c and v + i < upto}


def residue_dlog(a, b, extra=8):
    """Coefficient of t^-1 in a * b'/b from expansions and a term-wise derivative."""
    F = a.desc.gf
    if not a:
        return 0
    lo = -40
    A = series_terms(a, 40)
    B = series_terms(b, 40)
    dB = {e - 1: c for e, c in B.items() if e % 2}
    Binv = series_terms(b.inv(), 40)
    prod = {}
    for e1, c1 in dB.items():
        for e2, c2 in Binv.items():
            e = e1 + e2
            if lo <= e < 40:
                prod[e] = prod.get(e, 0) ^ F.mul(c1, c2)
    res = 0
    for e1, c1 in A.items():
        c2 = prod.get(-1 - e1)
        if c2:
            res ^= F.mul(c1, c2)
    return res


def wp_class_reduce(c):
    """Canonical class by removing even negative exponents term by term."""
    desc = c.desc
    F = desc.gf
    terms = series_terms(c, 1)
    while True:
        even = [e for e, a in terms.items() if a and e < 0 and e % 2 == 0]
        if not even:
            break
        e = min(even)
        r = F.sqrt(terms[e])
        # subtract wp(r t^(e/2)) = r^2 t^e + r t^(e/2)
        terms[e] ^= F.mul(r, r)
        terms[e // 2] = terms.get(e // 2, 0) ^ r
    principal = tuple((e, a) for e, a in sorted(terms.items(), reverse=True) if a and e < 0)
    return WpClass(principal, F.trace(terms.get(0, 0)))


def finite_arf_bit(desc, blocks):
    """Arf bit of a nonsingular form over GF(2^k), from its number of zeros."""
    q = 1 << desc.k
    n = len(blocks)
    elems = [desc.const(c) for c in range(q)]
    zeros = 0
    for xs in product(elems, repeat=2 * n):
        s = desc.zero
        for m, (b, c) in enumerate(blocks):
            x, y = xs[2 * m], xs[2 * m + 1]
            s = s + b * x * x + x * y + c * y * y
        zeros += not s
    # zeros = q^(2n-1) + eps (q^n - q^(n-1)); eps = +1 iff the Arf invariant is trivial
    plus = q ** (2 * n - 1) + q ** n - q ** (n - 1)
    return 0 if zeros == plus else 1


def etale_mul(a, p, q):
    x1, y1 = p
    x2, y2 = q
    yy = y1 * y2
    return (x1 * x2 + a * yy, x1 * y2 + x2 * y1 + yy)


def mat_mul_L(a, X, Y):
    out = []
    for r in range(2):
        row = []
        for c in range(2):
            s0 = etale_mul(a, X[r][0], Y[0][c])
            s1 = etale_mul(a, X[r][1], Y[1][c])
            row.append((s0[0] + s1[0], s0[1] + s1[1]))
        out.append(row)
    return out


def srd_minors(M):
    """Srd of a quaternion matrix as the sum of principal 2x2 minors of its split image."""
    from c2f.quaternion import split_embedding

    Q = M[0][0].algebra
    a = Q.a
    n = len(M)
    big = [[None] * (2 * n) for _ in range(2 * n)]
    for r in range(n):
        for c in range(n):
            img = split_embedding(M[r][c])
            for dr in range(2):
                for dc in range(2):
                    big[2 * r + dr][2 * c + dc] = img[dr][dc]
    z = a.desc.zero
    s = (z, z)
    for p in range(2 * n):
        for q in range(p + 1, 2 * n):
            d1 = etale_mul(a, big[p][p], big[q][q])
            d2 = etale_mul(a, big[p][q], big[q][p])
            s = (s[0] + d1[0] + d2[0], s[1] + d1[1] + d2[1])
    assert not s[1]
    return s[0]
