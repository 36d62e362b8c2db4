import pytest
from hypothesis import given, strategies as st

from c2f.field import FieldError, square_class, square_class_eq
from c2f.quaternion import (ALT, NEITHER, SYM_NOT_ALT, InvolutionDesc, QuaternionAlgebra,
                            canonical_involution, classify_sym_alt, default_division_algebra,
                            det_involution, hilbert_symbol, is_division, matrix_srd,
                            reduced_invariants, split_embedding)
from c2f.search import search_oracle
from c2f.forms import norm_form

import oracles
from strategies import LOCAL1, LOCAL2, Q1, elems, nonzero_elems, quats


def embed_mul(A, x, y):
    return oracles.mat_mul_L(A.a, split_embedding(x), split_embedding(y))


# -- arithmetic -------------------------------------------------------------------

def test_relations(Q):
    a, b = Q.a, Q.b
    i, j, k = Q.i, Q.j, Q.k
    assert i * i == i + a
    assert j * j == Q.scalar(b)
    assert i * j == k
    assert j * i == j + k
    assert k * k == Q.scalar(a * b)


def test_inverse_of_j(Q):
    assert Q.j.inv() == Q.j * Q.b.inv()


def test_inverse_needs_unit():
    F = LOCAL1
    A = QuaternionAlgebra(F, F.one, F.one)  # split
    x = next(x for x in (A.one + A.j, A.i + A.j, A.one + A.i + A.j) if not x.nrd())
    with pytest.raises(ZeroDivisionError):
        x.inv()


def test_algebra_mismatch(Q):
    other = QuaternionAlgebra(LOCAL1, LOCAL1.one, LOCAL1.t + 1)
    with pytest.raises(Exception):
        Q.i * other.i


def test_reduced_invariant_examples(Q):
    a, b = Q.a, Q.b
    assert (Q.i + Q.k).nrd() == a + a * b
    assert (Q.i + Q.j * (a / b)).nrd() == a + a * a / b
    assert reduced_invariants(Q.j) == (Q.desc.zero, b)


def test_canonical_involution_examples(Q):
    assert canonical_involution(Q.i) == Q.one + Q.i
    assert canonical_involution(Q.j) == Q.j
    assert canonical_involution(Q.k) == Q.k


def test_classify_examples(Q):
    g = InvolutionDesc.canonical(Q)
    assert classify_sym_alt(g, Q.one) == ALT
    assert classify_sym_alt(g, Q.j) == SYM_NOT_ALT
    assert classify_sym_alt(g, Q.i) == NEITHER


def test_classify_transported(Q):
    th = InvolutionDesc(Q.j)
    assert th.kind == "orthogonal"
    assert classify_sym_alt(th, Q.j) == ALT
    assert th(Q.j) == Q.j * Q.desc.one
    # Sym(Q, theta) = j Sym(Q, gamma)
    assert classify_sym_alt(th, Q.j * Q.k) == SYM_NOT_ALT
    assert classify_sym_alt(th, Q.j * Q.i) == NEITHER


def test_sym_alt_dimensions(Q):
    g = InvolutionDesc.canonical(Q)
    basis = [Q.one, Q.i, Q.j, Q.k]
    sym = [x for x in basis if g(x) == x]
    alt = [x for x in basis if classify_sym_alt(g, x) == ALT]
    assert sym == [Q.one, Q.j, Q.k] and alt == [Q.one]


def test_involution_requires_symmetric_unit(Q):
    with pytest.raises(ValueError):
        InvolutionDesc(Q.i)


def test_hilbert_symbol_examples(F):
    t = F.t
    assert hilbert_symbol(F.one, t) == 1
    assert search_oracle(norm_form(QuaternionAlgebra(F, F.one, t)), 3) is None
    assert hilbert_symbol(t * t + t, 1 + t ** 3) == 0
    assert hilbert_symbol(F.one, t * t) == 0
    w = search_oracle(norm_form(QuaternionAlgebra(F, F.one, t * t)), 3)
    assert w is not None


def test_hilbert_symbol_needs_local(R):
    with pytest.raises(FieldError):
        hilbert_symbol(R.one, R.t)


def test_is_division_examples(F):
    t = F.t
    assert is_division(QuaternionAlgebra(F, F.one, t)).division is True
    assert is_division(QuaternionAlgebra(F, t * t + t, t)).division is False
    res = is_division(QuaternionAlgebra(F, F.one, F.one), witness=True)
    assert res.division is False
    nf = norm_form(QuaternionAlgebra(F, F.one, F.one))
    assert res.verdict.witness is not None and not nf.value(res.verdict.witness)


def test_is_division_ratfunc(R):
    res = is_division(QuaternionAlgebra(R, R.one, R.one))
    assert res.division is False
    res = is_division(QuaternionAlgebra(R, R.one, R.t), search_bound=2)
    assert res.division is None and not res.verdict.is_decided


def test_default_division_algebra():
    for k in (1, 2, 3):
        from c2f.field import FieldDescriptor
        A = default_division_algebra(FieldDescriptor.local(k))
        assert hilbert_symbol(A.a, A.b) == 1
    with pytest.raises(FieldError):
        from c2f.field import FieldDescriptor
        default_division_algebra(FieldDescriptor.finite(2))


def test_split_embedding_examples(Q):
    b = Q.b
    z, o = Q.desc.zero, Q.desc.one
    assert split_embedding(Q.k) == [[(z, z), (z, b)], [(o, o), (z, z)]]
    assert split_embedding(Q.one) == [[(o, z), (z, z)], [(z, z), (o, z)]]
    ij = embed_mul(Q, Q.i, Q.j)
    ji = embed_mul(Q, Q.j, Q.i)
    sum_ = [[(p[0] + q[0], p[1] + q[1]) for p, q in zip(r1, r2)] for r1, r2 in zip(ij, ji)]
    assert sum_ == split_embedding(Q.j)


def test_matrix_srd_examples(Q):
    x, y = Q.i + Q.k, Q.one + Q.i * Q.desc.t + Q.j
    z = Q.zero
    assert matrix_srd([[x]]) == x.nrd()
    assert matrix_srd([[x, z], [z, y]]) == x.nrd() + y.nrd() + x.trd() * y.trd()
    assert matrix_srd([[z, z], [z, z]]) == Q.desc.zero


def test_det_involution_examples(Q):
    assert square_class_eq(det_involution(InvolutionDesc(Q.j)).element(), Q.b)
    assert square_class_eq(det_involution(InvolutionDesc(Q.k)).element(), Q.a * Q.b)
    lam = Q.desc.t + 1
    assert det_involution(InvolutionDesc(Q.j * lam)) == square_class(Q.b)
    with pytest.raises(ValueError):
        det_involution(InvolutionDesc.canonical(Q))


# -- properties ---------------------------------------------------------------------

@given(quats(), quats(), quats())
def test_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(quats(), quats())
def test_embedding_is_multiplicative(x, y):
    assert split_embedding(x * y) == embed_mul(Q1, x, y)


@given(quats())
def test_embedding_trace_and_det(x):
    M = split_embedding(x)
    tr = (M[0][0][0] + M[1][1][0], M[0][0][1] + M[1][1][1])
    d1 = oracles.etale_mul(Q1.a, M[0][0], M[1][1])
    d2 = oracles.etale_mul(Q1.a, M[0][1], M[1][0])
    det = (d1[0] + d2[0], d1[1] + d2[1])
    z = Q1.desc.zero
    assert tr == (x.trd(), z) and det == (x.nrd(), z)


@given(quats(), quats())
def test_involution_anti_automorphism(x, y):
    g = canonical_involution
    assert g(x * y) == g(y) * g(x)
    assert g(g(x)) == x


@given(quats(), quats())
def test_norm_multiplicative_trace_additive(x, y):
    assert (x * y).nrd() == x.nrd() * y.nrd()
    assert (x + y).trd() == x.trd() + y.trd()


@given(quats())
def test_norm_identity(x):
    assert canonical_involution(x) * x == Q1.scalar(x.nrd())
    assert x * x + x * x.trd() + Q1.scalar(x.nrd()) == Q1.zero


@given(quats(nonzero=True))
def test_inverse(x):
    assert x * x.inv() == Q1.one and x.inv() * x == Q1.one


@given(quats(A=QuaternionAlgebra(LOCAL2, LOCAL2.const(2), LOCAL2.t), max_deg=1),
       quats(A=QuaternionAlgebra(LOCAL2, LOCAL2.const(2), LOCAL2.t), max_deg=1))
def test_norm_multiplicative_gf4(x, y):
    assert (x * y).nrd() == x.nrd() * y.nrd()


@given(elems(), nonzero_elems(), nonzero_elems())
def test_hilbert_symbol_additive_in_b(a, b1, b2):
    assert hilbert_symbol(a, b1 * b2) == hilbert_symbol(a, b1) ^ hilbert_symbol(a, b2)


@given(elems(), elems(), nonzero_elems())
def test_hilbert_symbol_additive_in_a(a1, a2, b):
    assert hilbert_symbol(a1 + a2, b) == hilbert_symbol(a1, b) ^ hilbert_symbol(a2, b)


@given(elems(max_deg=2), nonzero_elems(max_deg=2))
def test_hilbert_symbol_split_has_norm_zero(a, b):
    A = QuaternionAlgebra(LOCAL1, a, b)
    res = is_division(A, search_bound=2, witness=True)
    if res.division is False and res.verdict.witness is not None:
        assert not norm_form(A).value(res.verdict.witness)
    if res.division is True:
        assert search_oracle(norm_form(A), 1) is None


@given(st.lists(quats(max_deg=1), min_size=4, max_size=4))
def test_matrix_srd_matches_minors(xs):
    M = [xs[:2], xs[2:]]
    assert matrix_srd(M) == oracles.srd_minors(M)


@given(quats(), quats())
def test_matrix_srd_diagonal(x, y):
    z = Q1.zero
    assert matrix_srd([[x, z], [z, y]]) == x.nrd() + y.nrd() + x.trd() * y.trd()
