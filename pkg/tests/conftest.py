from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from nodalis.field import QQ, prime_field
from nodalis.parsing import parse_polynomial
from nodalis.poly import BivariatePoly

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

FIELDS = [QQ, prime_field(5), prime_field(7), prime_field(13)]

small_fractions = st.builds(
    Fraction, st.integers(-9, 9), st.sampled_from([1, 1, 2, 3, 4, 5])
)


def coeff_strategy(desc):
    if desc.kind == "prime_field":
        return st.integers(0, desc.p - 1).map(desc)
    return small_fractions.map(desc)


def poly_strategy(desc=QQ, max_deg=4, min_deg=0, max_terms=6):
    monos = [(i, k - i) for k in range(min_deg, max_deg + 1) for i in range(k + 1)]
    return st.dictionaries(st.sampled_from(monos), coeff_strategy(desc), max_size=max_terms).map(
        lambda d: BivariatePoly.from_dict(desc, d)
    )


@st.composite
def nodal_curves(draw, desc=QQ, max_deg=5):
    """``(Y - aX)(Y - bX) + noise``, noise of order >= 3; returns (F, (a, b))."""
    a = draw(coeff_strategy(desc))
    b = draw(coeff_strategy(desc).filter(lambda c: c != a))
    X, Y = BivariatePoly.x(desc), BivariatePoly.y(desc)
    noise = draw(poly_strategy(desc, max_deg=max_deg, min_deg=3))
    return (Y - X.scale(a)) * (Y - X.scale(b)) + noise, (a, b)


@pytest.fixture
def nodal_cubic():
    return parse_polynomial("Y^2 - X^2 - X^3")


@pytest.fixture
def P():
    return parse_polynomial
