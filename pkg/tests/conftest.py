import pytest
from hypothesis import HealthCheck, settings

from c2f.field import FieldDescriptor
from c2f.forms import QBase
from c2f.quaternion import QuaternionAlgebra

settings.register_profile("c2f", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("c2f")


@pytest.fixture
def F():
    return FieldDescriptor.local(1)


@pytest.fixture
def R():
    return FieldDescriptor.ratfunc(1)


@pytest.fixture
def F4():
    return FieldDescriptor.local(2)


@pytest.fixture
def Q(F):
    return QuaternionAlgebra(F, F.one, F.t)


@pytest.fixture
def base(Q):
    return QBase.canonical(Q)
