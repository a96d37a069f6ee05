import pytest
from hypothesis import HealthCheck, settings

from hzoo.constructions.morphisms import quadratic_morphism
from hzoo.constructions.polynomials import f_d, vandermonde

settings.register_profile(
    "hzoo",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("hzoo")


@pytest.fixture(scope="session")
def f3():
    return f_d(3)


@pytest.fixture(scope="session")
def f4():
    return f_d(4)


@pytest.fixture(scope="session")
def v3():
    return vandermonde(3)


@pytest.fixture(scope="session")
def phi():
    """The quadratic morphism on R^2: (x1^2 - x2^2, 2 x1 x2)."""
    return quadratic_morphism(1)
