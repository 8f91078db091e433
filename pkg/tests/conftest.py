import pytest

from neronlab.algebra import GF, parse_coefficients
from neronlab.weierstrass import WeierstrassEq


def make_curve(p, literal, n=1):
    F = GF(p, n)
    return WeierstrassEq.from_coeffs(parse_coefficients(literal, F), F)


@pytest.fixture
def curve():
    return make_curve
