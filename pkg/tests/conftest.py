import pytest

from extsquare import rings


@pytest.fixture
def zmod97():
    return rings.ModularRing(97)


@pytest.fixture
def integers():
    return rings.IntegerRing()


@pytest.fixture
def poly_xi():
    return rings.PolynomialRing(("xi",))
