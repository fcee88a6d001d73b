from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from holosign.ratfunc import X
from holosign.scalar import sqrt_scalar

# fixed-seed property runs: every suite draws at least 200 cases
settings.register_profile(
    "holosign",
    max_examples=200,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("holosign")

x = X
HALF = Fraction(1, 2)


def legendre_pair(t):
    return (2 * x + 3) * t / (x + 2), -(x + 1) / (x + 2)


CLOSED_FORM_PAIR = ((x + 2) / (x + 1), -(x + 3) / (x + 1))
BINOMIAL_CUBE_PAIR = (
    (18 * x**2 + 36 * x + 12) / ((x + 1) * (x + 2) * (6 * x**2 + 4 * x + 1)),
    -3 * (3 * x + 2) * (3 * x + 1) * (6 * x**2 + 16 * x + 11)
    / ((x + 1) * (x + 2) * (6 * x**2 + 4 * x + 1)),
)
ROOT_HALF = 1 / sqrt_scalar(2)


@pytest.fixture
def closed_form_pair():
    return CLOSED_FORM_PAIR
