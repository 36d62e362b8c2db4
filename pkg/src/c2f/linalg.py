"""Gaussian elimination over F or over a division algebra.

Entries only need ``+``, ``*``, ``inv()`` and truthiness.  Row operations are
left multiplications, so the routines are valid over noncommutative division
rings as well as over fields.
"""


def inverse(M, zero, one):
    """Inverse of a square matrix, or None when it is singular."""
    n = len(M)
    A = [list(row) + [one if r == c else zero for c in range(n)] for r, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return None
        A[c], A[piv] = A[piv], A[c]
        p = A[c][c].inv()
        A[c] = [p * x for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [x + f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def matmul(A, B, zero):
    out = []
    for row in A:
        new = []
        for c in range(len(B[0])):
            s = zero
            for r, x in enumerate(row):
                if x and B[r][c]:
                    s = s + x * B[r][c]
            new.append(s)
        out.append(new)
    return out


def rref(rows, ncols):
    """Reduced row echelon form over a field; returns ``(rows, pivot_columns)``."""
    A = [list(r) for r in rows]
    pivots = []
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][c].inv()
        A[rank] = [p * x for x in A[rank]]
        for r in range(len(A)):
            if r != rank and A[r][c]:
                f = A[r][c]
                A[r] = [x + f * y for x, y in zip(A[r], A[rank])]
        pivots.append(c)
        rank += 1
    return A[:rank], pivots


def kernel(rows, ncols, zero, one):
    """Basis of the right kernel ``{x : rows * x = 0}`` over a field."""
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = R[r][f]  # characteristic 2: no sign
        basis.append(v)
    return basis


def solve(rows, rhs, ncols, zero):
    """One solution of ``rows * x = rhs`` over a field (free variables 0), or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for r, p in enumerate(pivots):
        x[p] = R[r][ncols]
    return x
