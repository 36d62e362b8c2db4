import pytest
from hypothesis import given, strategies as st

from c2f.artin_schreier import (TRIVIAL, WpClass, WpClassUndetermined, abs_trace, wp_class,
                                wp_solve)
from c2f.field import (INF, FieldDescriptor, FieldError, derivative, is_square_sqrt, residue_dlog,
                       square_class, square_class_eq, square_decompose, valuation,
                       valuation_expand)

import oracles
from strategies import LOCAL2, elems, nonzero_elems


# -- ring operations -----------------------------------------------------------

def test_add_is_characteristic_two(R):
    assert R.t + R.t == R.zero


def test_inverse_of_quotient(F):
    t = F.t
    assert (t / (1 + t)).inv() == (1 + t) / t


def test_frobenius(F):
    t = F.t
    assert (1 + t).frobenius() == 1 + t * t


def test_descriptor_mismatch_rejected(F, F4):
    with pytest.raises(FieldError):
        F.t + F4.t


def test_division_by_zero(F):
    with pytest.raises(ZeroDivisionError):
        F.t / F.zero


def test_finite_field_has_no_t():
    with pytest.raises(FieldError):
        FieldDescriptor.finite(2).t


# -- squares ---------------------------------------------------------------------

def test_sqrt_examples(F):
    t = F.t
    assert is_square_sqrt(t * t + 1) == t + 1
    assert is_square_sqrt(t) is None
    assert is_square_sqrt(F.zero) == F.zero


def test_square_decompose_examples(F):
    t = F.t
    assert square_decompose(1 + t) == (F.one, F.one)
    assert square_decompose(t ** 3) == (F.zero, t)
    assert square_decompose((1 + t) / t) == (F.one, 1 / t)


def test_square_decompose_rejects_finite():
    G = FieldDescriptor.finite(2)
    with pytest.raises(FieldError):
        square_decompose(G.one)


def test_square_class_examples(F):
    t = F.t
    assert square_class(t ** 3).rep == square_class(t).rep
    assert square_class((1 + t) ** 2 / t ** 4).is_trivial
    assert square_class_eq(t * (1 + t), t ** 3 * (1 + t) ** 5)
    assert not square_class_eq(t, 1 + t)


# -- t-adic expansion ---------------------------------------------------------------

def test_valuation_expand_examples(F):
    t = F.t
    assert valuation_expand((1 + t) / t, 4) == (-1, [1, 1, 0, 0])
    assert valuation_expand(F.zero, 4) == (INF, [])
    # frozen from the long-division oracle
    assert oracles.laurent(t * t / (1 + t), 6) == (2, [1] * 6)
    assert valuation_expand(t * t / (1 + t), 6) == (2, [1] * 6)


def test_residue_examples(F):
    t = F.t
    assert residue_dlog(F.one, t) == 1
    assert residue_dlog(t, t) == 0
    assert oracles.residue_dlog(1 / t, 1 + t) == 1
    assert residue_dlog(1 / t, 1 + t) == 1


def test_residue_rejects_zero(F):
    with pytest.raises(ZeroDivisionError):
        residue_dlog(F.one, F.zero)


# -- Artin-Schreier classes ------------------------------------------------------------

def test_wp_class_examples(F):
    t = F.t
    assert wp_class(t * t + t) == TRIVIAL
    assert wp_class(F.one) == WpClass((), 1)
    # t^-2 + t^-1 = wp(t^-1): the class is trivial
    c = t ** -2 + t ** -1
    assert oracles.wp_class_reduce(c) == TRIVIAL
    assert wp_class(c) == TRIVIAL
    assert wp_class(t ** -3 + t ** -2) == WpClass(((-1, 1), (-3, 1)), 0)


def test_wp_class_ratfunc_undetermined(R):
    with pytest.raises(WpClassUndetermined):
        wp_class(1 / (1 + R.t))


def test_wp_class_ratfunc_determined(R):
    t = R.t
    assert wp_class(t * t + t) == TRIVIAL
    assert wp_class(1 / t) == WpClass(((-1, 1),), 0)


def test_wp_solve_examples(F):
    t = F.t
    x = wp_solve(t * t + t, 16)
    assert x.terms() == {1: 1}
    assert wp_solve(F.one, 16) is None
    y = wp_solve(t, 20)
    assert y.terms() == {1: 1, 2: 1, 4: 1, 8: 1, 16: 1}
    assert y.wp().agrees_with(t)


def test_wp_solve_over_gf4_constant(F4):
    x = wp_solve(F4.one, 8)
    assert x is not None and x.wp().agrees_with(F4.one)


def test_abs_trace_examples(F, F4):
    assert abs_trace(1, F) == 1
    assert abs_trace(1, F4) == 0
    # exhaustive root search: x^2 + x + 1 has a root in GF(4)
    gf = F4.gf
    assert any(gf.mul(x, x) ^ x == 1 for x in range(4))
    assert abs_trace(0, F) == 0 and abs_trace(0, F4) == 0


@given(st.integers(1, 6), st.data())
def test_abs_trace_matches_root_search(k, data):
    desc = FieldDescriptor.local(k)
    c = data.draw(st.integers(0, (1 << k) - 1))
    gf = desc.gf
    has_root = any(gf.mul(x, x) ^ x == c for x in range(1 << k))
    assert abs_trace(c, desc) == (0 if has_root else 1)


# -- properties ---------------------------------------------------------------------

@given(elems(), elems())
def test_frobenius_additive(x, y):
    assert (x + y).frobenius() == x.frobenius() + y.frobenius()


@given(elems(LOCAL2), elems(LOCAL2))
def test_frobenius_additive_gf4(x, y):
    assert (x + y) ** 2 == x * x + y * y


@given(elems())
def test_square_decompose_roundtrip(x):
    a, b = square_decompose(x)
    assert a * a + x.desc.t * b * b == x


@given(elems(LOCAL2))
def test_square_decompose_roundtrip_gf4(x):
    a, b = square_decompose(x)
    assert a * a + x.desc.t * b * b == x


@given(nonzero_elems(), nonzero_elems())
def test_valuation_multiplicative(x, y):
    assert valuation(x * y) == valuation(x) + valuation(y)


@given(nonzero_elems(LOCAL2), nonzero_elems(LOCAL2))
def test_expansion_multiplicative(x, y):
    n = 8
    vx, ex = valuation_expand(x, n)
    vy, ey = valuation_expand(y, n)
    vz, ez = valuation_expand(x * y, n)
    gf = x.desc.gf
    prod = []
    for m in range(n):
        s = 0
        for i in range(m + 1):
            s ^= gf.mul(ex[i], ey[m - i])
        prod.append(s)
    assert vz == vx + vy and ez == prod


@given(nonzero_elems())
def test_expansion_matches_oracle(x):
    assert valuation_expand(x, 10) == oracles.laurent(x, 10)


@given(elems(), nonzero_elems(), nonzero_elems())
def test_residue_additive(a, b1, b2):
    assert residue_dlog(a, b1 * b2) == residue_dlog(a, b1) ^ residue_dlog(a, b2)


@given(elems(max_deg=2), nonzero_elems(max_deg=2))
def test_residue_matches_oracle(a, b):
    assert residue_dlog(a, b) == oracles.residue_dlog(a, b)


@given(elems(), elems())
def test_wp_class_invariant(c, y):
    assert wp_class(c + y.wp()) == wp_class(c)


@given(elems(LOCAL2), elems(LOCAL2))
def test_wp_class_invariant_gf4(c, y):
    assert wp_class(c + y * y + y) == wp_class(c)


@given(elems())
def test_wp_class_matches_reducer(c):
    assert wp_class(c) == oracles.wp_class_reduce(c)


@given(elems(LOCAL2))
def test_wp_class_matches_reducer_gf4(c):
    assert wp_class(c) == oracles.wp_class_reduce(c)


@given(elems(), elems())
def test_wp_class_additive(c, d):
    assert wp_class(c + d) == wp_class(c) + wp_class(d)


@given(elems(), st.integers(4, 40))
def test_wp_solve_solves(c, precision):
    x = wp_solve(c, precision)
    if wp_class(c).is_trivial:
        assert x is not None and x.wp().agrees_with(c)
    else:
        assert x is None


@given(elems())
def test_derivative_kills_squares(x):
    assert not derivative(x * x)
