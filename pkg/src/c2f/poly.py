"""Dense univariate polynomials in ``t`` over GF(2^k).

A polynomial is a tuple of GF(2^k) ints, lowest degree first, with no
trailing zeros; ``()`` is the zero polynomial.  Every function takes the
coefficient field as its first argument, mirroring how the elements carry no
field reference of their own.
"""

from .gf2k import clmul

ZERO = ()
ONE = (1,)
T = (0, 1)


# GF(2) coefficients: pack into ints and use carry-less arithmetic

def _pack(a):
    return int("".join("1" if c else "0" for c in reversed(a)), 2) if a else 0


def _unpack(n):
    return tuple(map(int, reversed(bin(n)[2:]))) if n else ZERO


def _divmod_bits(a, b):
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q ^= 1 << s
        a ^= b << s
    return q, a


def norm(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(a):
    """Degree; -1 for the zero polynomial."""
    return len(a) - 1


def val(a):
    """Index of the lowest nonzero coefficient; None for zero."""
    for i, c in enumerate(a):
        if c:
            return i
    return None


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    if len(a) == len(b):
        return norm(out)
    return tuple(out)


def scale(F, a, c):
    if c == 0:
        return ZERO
    if c == 1:
        return a
    return tuple(F.mul(x, c) for x in a)


def mul(F, a, b):
    if not a or not b:
        return ZERO
    if len(a) == 1:
        return scale(F, b, a[0])
    if len(b) == 1:
        return scale(F, a, b[0])
    if F.k == 1:
        return _unpack(clmul(_pack(a), _pack(b)))
    out = [0] * (len(a) + len(b) - 1)
    fm = F.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] ^= fm(x, y)
    return tuple(out)  # product of nonzero leading coefficients is nonzero


def shift(a, n):
    """Multiply by t^n (n >= 0) or drop the lowest -n coefficients."""
    if not a:
        return a
    if n >= 0:
        return (0,) * n + a
    return norm(a[-n:])


def divmod_(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return ZERO, a
    if F.k == 1:
        q, r = _divmod_bits(_pack(a), _pack(b))
        return _unpack(q), _unpack(r)
    inv_lead = F.inv(b[-1])
    r = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i]
        if c:
            f = F.mul(c, inv_lead)
            q[i - db] = f
            for j in range(db + 1):
                if b[j]:
                    r[i - db + j] ^= F.mul(f, b[j])
    return norm(q), norm(r[:db])


def monic(F, a):
    if not a or a[-1] == 1:
        return a
    return scale(F, a, F.inv(a[-1]))


def gcd(F, a, b):
    if F.k == 1:
        x, y = _pack(a), _pack(b)
        while y:
            x, y = y, _divmod_bits(x, y)[1]
        return _unpack(x)
    while b:
        a, b = b, divmod_(F, a, b)[1]
    return monic(F, a)


def deriv(a):
    """Formal derivative d/dt; only odd exponents survive in characteristic 2."""
    return norm([a[i] if i % 2 else 0 for i in range(1, len(a))])


def sqrt(F, a):
    """Polynomial square root, or None when ``a`` is not a square."""
    if any(a[i] for i in range(1, len(a), 2)):
        return None
    return tuple(F.sqrt(a[i]) for i in range(0, len(a), 2))


def even_odd(F, a):
    """Return ``(A, B)`` with ``a = A^2 + t*B^2``."""
    A = norm(F.sqrt(a[i]) for i in range(0, len(a), 2))
    B = norm(F.sqrt(a[i]) for i in range(1, len(a), 2))
    return A, B


def square(F, a):
    if not a:
        return a
    out = [0] * (2 * len(a) - 1)
    for i, c in enumerate(a):
        out[2 * i] = F.mul(c, c)
    return tuple(out)


def compose_shift(F, a, c):
    """a(t + c)."""
    out = ZERO
    base = ONE
    lin = norm((c, 1))
    for coef in a:
        out = add(out, scale(F, base, coef))
        base = mul(F, base, lin)
    return out


def reverse(a, n):
    """t^n * a(1/t) for n >= degree(a)."""
    out = [0] * (n + 1)
    for i, c in enumerate(a):
        out[n - i] = c
    return norm(out)
