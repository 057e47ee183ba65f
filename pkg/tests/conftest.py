"""Shared fixtures and strategies for the steiner_chains test suite."""

import math

import pytest
from hypothesis import settings, strategies as st

from steiner_chains.core.geometry import Gauge, concentric_ratio, make_gauge

settings.register_profile("steiner", derandomize=True, deadline=None, max_examples=40)
settings.load_profile("steiner")

SQRT2 = math.sqrt(2.0)


@st.composite
def gauges(draw, n_values=(3, 4, 5, 6, 8)):
    """
    Valid gauges with a proper (non-concentric) porism.

    R is drawn above the concentric ratio for n so that d^2 > 0.
    """
    n = draw(st.sampled_from(n_values))
    r = draw(st.floats(min_value=0.25, max_value=4.0))
    stretch = draw(st.floats(min_value=1.05, max_value=4.0))
    return make_gauge(concentric_ratio(n) * stretch * r, r, n)


phases = st.floats(min_value=0.0, max_value=2.0 * math.pi, allow_nan=False)


@pytest.fixture
def gauge_6_1():
    """Soddy pair (6, 1) at distance 1, carrying 4-chains"""
    return Gauge(6.0, 1.0, 1.0, 4)


@pytest.fixture
def gauge_14_1():
    return Gauge(14.0, 1.0, 1.0, 3)


@pytest.fixture
def concentric4():
    return make_gauge(3.0 + 2.0 * SQRT2, 1.0, 4)


@pytest.fixture
def gauge_6_axial():
    return Gauge(4.0, 1.0, math.sqrt(11.0 / 3.0), 6)
