import pytest
from hypothesis import given, strategies as st

from c2f.forms import FormError, HermForm, QuadFormF, QuadFormQ
from c2f.parsing import ParseError, parse, parse_element, parse_quaternion
from c2f.printing import format_elem, format_form
from c2f.quaternion import InvolutionDesc

from strategies import LOCAL1, LOCAL2, Q1, elems, quats


def test_element_syntax(F, F4):
    t = F.t
    assert parse_element("(1+t)/t", F) == (1 + t) / t
    assert parse_element("t^-2 + t^3", F) == t ** -2 + t ** 3
    assert parse_element("0b11 + 0b10*t^3", F4) == F4.const(3) + F4.const(2) * F4.t ** 3
    assert parse_element("-t", F) == t


def test_quaternion_syntax(Q):
    assert parse_quaternion("q{0;1;0;1}", Q) == Q.i + Q.k
    assert parse_quaternion("i + k", Q) == Q.i + Q.k
    assert parse_quaternion("(1/t)*j + 1", Q) == Q.j * (1 / Q.desc.t) + Q.one


def test_form_examples(F, Q):
    rho = parse("quad[q{0;1;0;1}]", F, Q)
    assert isinstance(rho, QuadFormQ) and rho.entries == (Q.i + Q.k,)
    phi = parse("herm[0b1]", F, Q)
    assert isinstance(phi, HermForm) and phi.is_alternating
    with pytest.raises(FormError, match="Alt"):
        parse("quad[q{1;0;0;0}]", F, Q)


def test_fquad_and_gram(F, Q):
    t = F.t
    f = parse("fquad[[1,t];[0,1] | t; 1+t]", F)
    assert f == QuadFormF(F, [(F.one, t), (F.zero, F.one)], [t, 1 + t])
    assert parse("fquad[| 1; t]", F) == QuadFormF(F, [], [F.one, t])
    assert parse("fquad[1; t]", F) == QuadFormF(F, [], [F.one, t])
    g = parse("gram[[i, j; 0, i]]", F, Q)
    assert not g.is_diagonal and g.gram[0][1] == Q.j
    assert parse("bilin[1; t]", F) == HermForm(F, [F.one, t])


def test_involution_header(F, Q):
    th = InvolutionDesc(Q.j)
    rho = parse("quad[1]", F, Q, th)
    assert rho.base.theta == th


def test_parse_error_position(F):
    with pytest.raises(ParseError) as e:
        parse_element("1 +\n (t *", F)
    assert e.value.line == 2 and e.value.column >= 5
    with pytest.raises(ParseError) as e:
        parse("quad[1", F)
    with pytest.raises(ParseError):
        parse_element("t t", F)
    with pytest.raises(ParseError):
        parse_element("1 % t", F)


def test_quaternion_without_algebra(F):
    with pytest.raises(ParseError):
        parse("quad[i]", F)


def test_coefficient_out_of_range(F):
    with pytest.raises(Exception):
        parse_element("0b11", F)


@given(elems(LOCAL2))
def test_element_print_parse(x):
    assert parse_element(format_elem(x), LOCAL2) == x


@given(quats())
def test_quaternion_print_parse(x):
    assert parse_quaternion(str(x), Q1) == x


@given(st.lists(st.tuples(elems(max_deg=2), elems(max_deg=2)), max_size=2),
       st.lists(elems(max_deg=2, nonzero=True), max_size=2))
def test_fquad_print_parse(blocks, diag):
    if not blocks and not diag:
        return
    f = QuadFormF(LOCAL1, blocks, diag)
    assert parse(format_form(f), LOCAL1) == f
