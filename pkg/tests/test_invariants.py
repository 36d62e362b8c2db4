import pytest
from hypothesis import given, strategies as st

from c2f.artin_schreier import TRIVIAL, WpClass, wp_class
from c2f.field import FieldDescriptor
from c2f.forms import QBase, QuadFormF, QuadFormQ, norm_form, orth_sum, scale, transport
from c2f.invariants import (SingularFormError, arf, arf_diagonal, arf_F, arf_gram, square_class,
                            square_class_eq)
from c2f.quaternion import InvolutionDesc, QuaternionAlgebra
from c2f.utable import cor3_form

import oracles
from strategies import LOCAL1, LOCAL2, Q1, elems, nonsingular_entries, nonzero_elems, quats

BASE1 = QBase.canonical(Q1)


def test_cor3_form_has_trivial_arf(Q):
    assert arf_diagonal(cor3_form(Q)).is_trivial
    assert arf_gram(QuadFormQ(QBase.canonical(Q), gram=cor3_form(Q).gram_matrix())).is_trivial


def test_one_dimensional_examples(Q, base):
    assert arf_diagonal(QuadFormQ(base, [Q.i])).cls == WpClass((), 1)
    for x in (Q.i, Q.i + Q.k, Q.i * Q.desc.t + Q.j, Q.one + Q.i + Q.k * (1 / Q.desc.t)):
        assert not arf_diagonal(QuadFormQ(base, [x])).is_trivial


def test_arf_diagonal_rejects_singular(Q, base):
    with pytest.raises(SingularFormError):
        arf_diagonal(QuadFormQ(base, [Q.i, Q.j]))


def test_arf_diagonal_needs_canonical(Q):
    b = QBase(Q, InvolutionDesc(Q.j))
    with pytest.raises(ValueError):
        arf_diagonal(QuadFormQ(b, [Q.one + Q.k]))


def test_arf_transported(Q, base):
    rho = QuadFormQ(base, [Q.i, Q.i + Q.k])
    moved = transport(rho, InvolutionDesc(Q.j))
    v = arf(moved)
    assert v == arf(rho) and v.transport == Q.j


def test_arf_gram_examples(Q, base):
    x = Q.i + Q.j
    assert arf_gram(QuadFormQ(base, gram=[[x]])).cls == wp_class(x.nrd())
    M = [[Q.i, Q.k], [Q.zero, Q.i + Q.one]]
    rho = QuadFormQ(base, gram=M)
    t = Q.desc.t
    assert arf_gram(scale(rho, t + 1)) == arf_gram(rho)


def test_arf_gram_singular(Q, base):
    with pytest.raises(SingularFormError):
        arf_gram(QuadFormQ(base, gram=[[Q.j]]))


def test_arf_F_examples(F):
    t = F.t
    a = 1 / t + t
    assert arf_F(QuadFormF(F, [(F.one, a)])).cls == wp_class(a)
    assert arf_F(QuadFormF(F, [(F.zero, t)])).is_trivial
    with pytest.raises(SingularFormError):
        arf_F(QuadFormF(F, [], [F.one]))


def test_norm_form_arf_is_trivial(F):
    # [1,a] + b[1,a] contributes a + a: the norm form of any quaternion algebra
    # is a 2-fold Pfister form, whose Arf class is trivial
    for a, b in ((F.one, F.t), (F.one / F.t, F.t + 1), (F.t ** -3, F.t)):
        assert arf_F(norm_form(QuaternionAlgebra(F, a, b))).is_trivial


def test_finite_arf_oracle_small():
    G = FieldDescriptor.finite(1)
    assert oracles.finite_arf_bit(G, [(G.one, G.one)]) == 1
    assert oracles.finite_arf_bit(G, [(G.zero, G.one)]) == 0
    assert oracles.finite_arf_bit(G, [(G.one, G.one), (G.one, G.one)]) == 0


@given(st.integers(1, 3), st.data())
def test_arf_F_matches_zero_count(k, data):
    G = FieldDescriptor.finite(k)
    q = 1 << k
    nblocks = data.draw(st.integers(1, 2 if k < 3 else 1))
    blocks = [(G.const(data.draw(st.integers(0, q - 1))), G.const(data.draw(st.integers(0, q - 1))))
              for _ in range(nblocks)]
    assert arf_F(QuadFormF(G, blocks)).cls.const_bit == oracles.finite_arf_bit(G, blocks)


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=2))
def test_arf_F_constant_blocks_reduce_to_residue_field(pairs):
    # constant blocks over GF(4)((t)): the class is the one of the residue form
    G = FieldDescriptor.finite(2)
    local = QuadFormF(LOCAL2, [(LOCAL2.const(b), LOCAL2.const(c)) for b, c in pairs])
    finite = [(G.const(b), G.const(c)) for b, c in pairs]
    assert arf_F(local).cls == WpClass((), oracles.finite_arf_bit(G, finite))


def test_square_class_examples(F):
    t = F.t
    assert square_class_eq(t, t ** 3)
    assert not square_class_eq(t, 1 + t)
    lam = t + t ** 2
    assert square_class_eq(lam * lam, F.one)
    with pytest.raises(ZeroDivisionError):
        square_class(F.zero)


# -- properties -------------------------------------------------------------------------

@given(st.lists(nonsingular_entries(), min_size=1, max_size=3), nonzero_elems())
def test_arf_scaling_invariant(xs, lam):
    rho = QuadFormQ(BASE1, xs)
    assert arf(scale(rho, lam)) == arf(rho)


@given(st.lists(nonsingular_entries(), min_size=1, max_size=2),
       st.lists(nonsingular_entries(), min_size=1, max_size=2))
def test_arf_additive(xs, ys):
    r1, r2 = QuadFormQ(BASE1, xs), QuadFormQ(BASE1, ys)
    assert arf(orth_sum(r1, r2)) == arf(r1) + arf(r2)


@given(st.lists(nonsingular_entries(max_deg=1), min_size=1, max_size=3))
def test_arf_gram_matches_diagonal(xs):
    rho = QuadFormQ(BASE1, xs)
    assert arf_gram(QuadFormQ(BASE1, gram=rho.gram_matrix())) == arf_diagonal(rho)


@given(st.lists(nonsingular_entries(max_deg=1), min_size=2, max_size=2),
       st.lists(quats(max_deg=1), min_size=4, max_size=4))
def test_arf_gram_lift_invariant(xs, ss):
    rho = QuadFormQ(BASE1, gram=[[xs[0], ss[0]], [Q1.zero, xs[1]]])
    try:
        base_arf = arf_gram(rho)
    except SingularFormError:
        return
    S = [ss[:2], ss[2:]]
    g = BASE1.theta
    M = rho.gram_matrix()
    lifted = [[M[r][c] + S[r][c] + g(S[c][r]) for c in range(2)] for r in range(2)]
    assert arf_gram(QuadFormQ(BASE1, gram=lifted)) == base_arf


@given(nonsingular_entries())
def test_doubled_entry_has_trivial_arf(y):
    assert arf(QuadFormQ(BASE1, [y, y])).cls == TRIVIAL


@given(nonsingular_entries())
def test_one_dimensional_arf_nontrivial(x):
    assert not arf(QuadFormQ(BASE1, [x])).is_trivial


@given(elems(), elems())
def test_arf_F_binary(b, c):
    assert arf_F(QuadFormF(LOCAL1, [(b, c)])).cls == wp_class(b * c)
