"""
Shared fixtures: the parameter points used across the suite.
"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from algebra import QContext  # noqa: E402
from families import WeightFamily  # noqa: E402


@pytest.fixture
def ctx_half():
    """sqrt-q = 1/2, q = 1/4."""
    return QContext.from_sqrt_q("1/2")


@pytest.fixture
def ctx_two_thirds():
    """sqrt-q = 2/3, q = 4/9."""
    return QContext.from_sqrt_q(Fraction(2, 3))


@pytest.fixture
def sw():
    return WeightFamily.stieltjes_wigert()


@pytest.fixture
def qlag1():
    return WeightFamily.q_laguerre(1)


@pytest.fixture
def qlag2():
    return WeightFamily.q_laguerre(2)


@pytest.fixture(
    params=[
        (WeightFamily.stieltjes_wigert(), "1/2"),
        (WeightFamily.stieltjes_wigert(), "2/3"),
        (WeightFamily.q_laguerre(1), "1/2"),
        (WeightFamily.q_laguerre(2), "2/3"),
    ],
    ids=["sw-1/2", "sw-2/3", "qlag1-1/2", "qlag2-2/3"],
)
def parameter_point(request):
    """(family, ctx) for each of the four reference parameter points."""
    family, sqrt_q = request.param
    return family, QContext.from_sqrt_q(sqrt_q)
