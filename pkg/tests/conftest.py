import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gapkit.algnum import AlgNum                     # noqa: E402
from gapkit.autgroup import aut_prime, d12_family    # noqa: E402
from gapkit.binforms import BinForm                  # noqa: E402
from gapkit.intpoly import IntPoly                   # noqa: E402


# the recurring cast: the quartic of 2cos(2pi/15) and the Galois cubics
QUARTIC = IntPoly((1, 4, -4, -1, 1))        # x^4 - x^3 - 4x^2 + 4x + 1
CUBIC = IntPoly((-1, -3, 0, 1))             # x^3 - 3x - 1
CUBIC_IMAGE = IntPoly((1, -3, 0, 1))        # x^3 - 3x + 1 (minpoly of a^2 - 2)
CBRT2 = IntPoly((-2, 0, 0, 1))              # x^3 - 2


@pytest.fixture(scope="session")
def alpha15():
    """2cos(2pi/15) ~ 1.8271"""
    return AlgNum.near(QUARTIC, Fraction(1827, 1000))


@pytest.fixture(scope="session")
def beta15():
    """2cos(4pi/15) ~ 1.3383"""
    return AlgNum.near(QUARTIC, Fraction(1338, 1000))


@pytest.fixture(scope="session")
def alpha_cubic():
    """largest root of x^3 - 3x - 1 ~ 1.8794"""
    return AlgNum.near(CUBIC, Fraction(1879, 1000))


@pytest.fixture(scope="session")
def beta_cubic():
    """alpha^2 - 2 ~ 1.5321, a root of x^3 - 3x + 1"""
    return AlgNum.near(CUBIC_IMAGE, Fraction(1532, 1000))


@pytest.fixture(scope="session")
def cbrt2():
    return AlgNum.near(CBRT2, Fraction(126, 100))


@pytest.fixture(scope="session")
def d12_form():
    return d12_family(3, 1)


@pytest.fixture(scope="session")
def d12_aut(d12_form):
    return aut_prime(d12_form)


@pytest.fixture(scope="session")
def cubic_form():
    return BinForm((1, 0, -3, -1))          # x^3 - 3xy^2 - y^3


@pytest.fixture(scope="session")
def cubic_aut(cubic_form):
    return aut_prime(cubic_form)
