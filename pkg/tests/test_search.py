import pytest
from hypothesis import given, strategies as st

from c2f.forms import HermForm, QuadFormF, QuadFormQ, norm_form
from c2f.quaternion import QuaternionAlgebra
from c2f.search import iter_witnesses, search_oracle, verify_witness
from c2f.utable import cor3_form

from strategies import LOCAL1, elems, nonzero_elems


def test_split_norm_form_has_low_witness(F):
    nf = norm_form(QuaternionAlgebra(F, F.one, F.one))
    w = search_oracle(nf, 1)
    assert w is not None and verify_witness(nf, w)


def test_totally_singular_pair_over_Q(Q, base):
    rho = QuadFormQ(base, [Q.j, Q.k])
    w = search_oracle(rho, 3)
    assert w is not None and verify_witness(rho, w)


def test_cor3_form_has_no_low_witness(Q):
    assert search_oracle(cor3_form(Q), 4) is None


def test_search_is_deterministic(F):
    rho = QuadFormF(F, [], [F.one, F.t, F.t + 1, F.t ** 2])
    assert search_oracle(rho, 3) == search_oracle(rho, 3)
    ws = list(iter_witnesses(rho, 2))
    assert ws[0] == search_oracle(rho, 2)
    assert all(verify_witness(rho, w) for w in ws)


def test_verify_witness_examples(F, Q, base):
    ts = QuadFormF(F, [], [F.one, F.t, F.one + F.t])
    assert verify_witness(ts, [F.one, F.one, F.one])
    assert not verify_witness(QuadFormQ(base, [Q.j]), [Q.one])
    nf = norm_form(Q)
    assert not verify_witness(nf, [F.one, F.zero, F.zero, F.zero])
    assert not verify_witness(ts, [F.zero] * 3)
    with pytest.raises(ValueError):
        verify_witness(ts, [F.one])


def test_hermitian_witness(Q, base):
    phi = HermForm(base, [Q.one, Q.one])
    w = search_oracle(phi, 1)
    assert w is not None and verify_witness(phi, w)
    assert not phi.value(w)


@given(st.lists(nonzero_elems(max_deg=2), min_size=1, max_size=4), st.integers(0, 3))
def test_search_witnesses_verify(ds, bound):
    rho = QuadFormF(LOCAL1, [], ds)
    w = search_oracle(rho, bound)
    if w is not None:
        assert verify_witness(rho, w)
    if len(ds) > 1 and ds[0] == ds[1]:
        assert search_oracle(rho, max(bound, 1)) is not None


@given(elems(max_deg=2), elems(max_deg=2))
def test_search_monotone_in_bound(b, c):
    rho = QuadFormF(LOCAL1, [(b, c)])
    if search_oracle(rho, 1) is not None:
        assert search_oracle(rho, 2) is not None
