"""Gamma, reciprocal gamma, digamma."""

import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from lapcyl.special import gamma, reciprocal_gamma, digamma, is_nonpositive_integer
from lapcyl import PoleError

SQRT_PI = math.sqrt(math.pi)


def rel_err(got, want):
    return abs(got - want) / max(abs(want), 1e-300)


def test_half_integer_values():
    assert rel_err(gamma(0.5), SQRT_PI) < 1e-15
    assert rel_err(gamma(1.5), 0.5 * SQRT_PI) < 1e-15
    # Gamma(-3/2) = Gamma(1/2) / ((-3/2)(-1/2)) = (4/3) sqrt(pi)
    assert rel_err(gamma(-1.5), (4.0 / 3.0) * SQRT_PI) < 1e-14
    assert rel_err(gamma(-1.5), 2.3632718012073547031) < 1e-14


def test_factorials():
    for n in range(1, 12):
        assert rel_err(gamma(float(n)), math.factorial(n - 1)) < 1e-14


def test_quarter_point():
    # frozen from a 25-digit evaluation of the integral definition
    assert rel_err(gamma(0.25), 3.6256099082219083119) < 1e-14


def test_complex_point():
    # frozen, 20 digits
    want = 1.5391003433867946979 - 3.8384919018379110316j
    assert rel_err(gamma(0.1 + 0.2j), want) < 1e-13


def test_poles_raise():
    for z in (0.0, -1.0, -2.0, -7.0):
        with pytest.raises(PoleError):
            gamma(z)


def test_reciprocal_gamma_is_entire():
    for z in (0.0, -1.0, -5.0):
        assert reciprocal_gamma(z) == 0.0
    assert rel_err(reciprocal_gamma(0.5), 1.0 / SQRT_PI) < 1e-14
    assert rel_err(reciprocal_gamma(-1.5), 3.0 / (4.0 * SQRT_PI)) < 1e-14


def test_is_nonpositive_integer():
    assert is_nonpositive_integer(0.0)
    assert is_nonpositive_integer(-3.0)
    assert not is_nonpositive_integer(1.0)
    assert not is_nonpositive_integer(-2.5)
    assert not is_nonpositive_integer(-3.0 + 0.1j)


@settings(max_examples=50, deadline=None, derandomize=True)
@given(st.floats(min_value=0.1, max_value=20.0))
def test_recurrence(x):
    assert rel_err(gamma(x + 1.0), x * gamma(x)) < 1e-13


@settings(max_examples=50, deadline=None, derandomize=True)
@given(st.floats(min_value=0.05, max_value=10.0))
def test_duplication(x):
    lhs = gamma(x) * gamma(x + 0.5)
    rhs = 2.0 ** (1.0 - 2.0 * x) * SQRT_PI * gamma(2.0 * x)
    assert rel_err(lhs, rhs) < 1e-12


@settings(max_examples=50, deadline=None, derandomize=True)
@given(st.floats(min_value=0.05, max_value=0.95))
def test_reflection(x):
    # Gamma(x) Gamma(1-x) = pi / sin(pi x)
    assert rel_err(gamma(x) * gamma(1.0 - x), math.pi / math.sin(math.pi * x)) < 1e-12


def test_digamma_frozen():
    assert rel_err(digamma(0.3), -3.5025242222001331249) < 1e-13
    assert rel_err(digamma(-1.7), -1.4857174995110567089) < 1e-12
    assert rel_err(digamma(1.0), -0.57721566490153286061) < 1e-14


def test_digamma_recurrence():
    for z in (0.2, 1.7, -0.4, 3.3, 0.5 + 0.5j):
        assert abs(digamma(z + 1) - digamma(z) - 1.0 / z) < 1e-12 * max(1.0, abs(digamma(z)))


def test_digamma_poles():
    with pytest.raises(PoleError):
        digamma(0.0)
    with pytest.raises(PoleError):
        digamma(-4.0)


def test_conjugate_symmetry():
    z = 0.7 + 1.3j
    assert cmath.isclose(gamma(z.conjugate()), gamma(z).conjugate(), rel_tol=1e-13)
