"""Hypothesis strategies for field elements, quaternions and forms."""

from hypothesis import strategies as st

from c2f.field import FieldDescriptor
from c2f.quaternion import QuaternionAlgebra

LOCAL1 = FieldDescriptor.local(1)
LOCAL2 = FieldDescriptor.local(2)
RAT1 = FieldDescriptor.ratfunc(1)
Q1 = QuaternionAlgebra(LOCAL1, LOCAL1.one, LOCAL1.t)


def polys(desc, max_deg=3):
    return st.lists(st.integers(0, (1 << desc.k) - 1), min_size=0, max_size=max_deg + 1)


@st.composite
def elems(draw, desc=LOCAL1, max_deg=3, nonzero=False):
    num = draw(polys(desc, max_deg))
    den = draw(polys(desc, max_deg))
    if not any(den):
        den = den + [1]
    x = desc.from_poly(num, den)
    if nonzero and not x:
        x = desc.one
    return x


def nonzero_elems(desc=LOCAL1, max_deg=3):
    return elems(desc, max_deg, nonzero=True)


@st.composite
def quats(draw, A=Q1, max_deg=2, nonzero=False):
    x = A(*[draw(elems(A.desc, max_deg)) for _ in range(4)])
    if nonzero and not x:
        x = A.one
    return x


@st.composite
def nonsingular_entries(draw, A=Q1, max_deg=2):
    x = draw(quats(A, max_deg))
    if not x.trd():
        x = x + A.i
    return x


@st.composite
def ts_entries(draw, A=Q1, max_deg=2):
    z = A.desc.zero
    x0, x2, x3 = (draw(elems(A.desc, max_deg)) for _ in range(3))
    if not (x2 or x3):
        x2 = A.desc.one
    return A(x0, z, x2, x3)
