"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The fuzz budget of criterion 10 defaults to 600 seconds and can be changed
with the C2F_FUZZ_SECONDS environment variable.
"""

import pytest

from c2f import acceptance
from c2f.field import FieldDescriptor
from c2f.quaternion import QuaternionAlgebra, default_division_algebra


@pytest.fixture(scope="module")
def opts():
    F = FieldDescriptor.local(1)
    return acceptance.Options(F, QuaternionAlgebra(F, F.one, F.t),
                              fuzz_seconds=acceptance.fuzz_seconds_from_env())


def run(capsys, check, opts):
    res = check(opts)
    with capsys.disabled():
        print("\n" + res.line())
    return res


def test_criterion_01_u_table(capsys, opts):
    assert run(capsys, acceptance.u_table_check, opts).passed


def test_criterion_02_anisotropic_trivial_arf_form(capsys, opts):
    assert run(capsys, acceptance.cor3_check, opts).passed


def test_criterion_03_symbol_search_consistency(capsys, opts):
    assert run(capsys, acceptance.symbol_check, opts).passed


def test_criterion_04_arf_properties(capsys, opts):
    assert run(capsys, acceptance.arf_check, opts).passed


def test_criterion_05_one_dimensional_arf(capsys, opts):
    assert run(capsys, acceptance.one_dim_arf_check, opts).passed


def test_criterion_06_no_symmetric_values(capsys, opts):
    assert run(capsys, acceptance.symmetric_values_check, opts).passed


def test_criterion_07_directness(capsys, opts):
    assert run(capsys, acceptance.directness_check, opts).passed


def test_criterion_08_trace_form(capsys, opts):
    assert run(capsys, acceptance.trace_form_check, opts).passed


def test_criterion_09_table_identities(capsys, opts):
    assert run(capsys, acceptance.table_identity_check, opts).passed


def test_criterion_10_engine_oracle_fuzz(capsys, opts):
    assert run(capsys, acceptance.fuzz_check, opts).passed


def test_u_table_over_gf4(capsys):
    F4 = FieldDescriptor.local(2)
    opts = acceptance.Options(F4, default_division_algebra(F4))
    assert run(capsys, acceptance.u_table_check, opts).passed
