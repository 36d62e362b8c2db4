import pytest

from c2f.field import FieldDescriptor, FieldError
from c2f.isotropy import decide
from c2f.quaternion import QuaternionAlgebra, default_division_algebra
from c2f.utable import SplitAlgebraError, cor3_form, format_table, u_table

EXPECTED = {"u+(F)": 2, "u_d+(F)": 2, "u-(F)": 0, "u~(F)": 4, "u(F)-lower": 4,
            "u-(Q)": 1, "u_d+(Q)": 1, "u+(Q)": 2, "u~(Q)": 3, "u(Q)": 3}


def test_table_over_gf2(F, Q):
    table = u_table(F, Q, samples=5)
    assert table.values() == EXPECTED
    assert table.verified and all(table.identities().values())
    assert table.entries["u~(F)"].witness.dim == 4
    assert table.entries["u~(Q)"].witness == cor3_form(Q)
    assert "u(Q)" in format_table(table)


def test_table_over_gf4():
    F4 = FieldDescriptor.local(2)
    table = u_table(F4, default_division_algebra(F4), samples=3)
    assert table.values() == EXPECTED and table.verified


def test_cor3_witness_is_anisotropic(Q):
    assert decide(cor3_form(Q)).is_anisotropic


def test_rejects_split_and_non_local(F, R):
    with pytest.raises(SplitAlgebraError):
        u_table(F, QuaternionAlgebra(F, F.one, F.one), samples=1)
    with pytest.raises(FieldError):
        u_table(R, QuaternionAlgebra(R, R.one, R.t), samples=1)
