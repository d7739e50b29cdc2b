"""Parabolic cylinder D_nu: closed forms, recurrence, both evaluation routes."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from lapcyl.special import pcf_d, erfc, gamma, reciprocal_gamma
from lapcyl import DomainError

SQRT_PI = math.sqrt(math.pi)


def rel_err(got, want):
    return abs(got - want) / max(abs(want), 1e-300)


def test_order_zero_is_gaussian():
    # D_0(z) = e^{-z^2/4}
    assert rel_err(pcf_d(0.0, 2.0), math.exp(-1.0)) < 1e-14
    for z in (0.0, 0.7, -3.1, 5.0):
        assert rel_err(pcf_d(0.0, z), math.exp(-z * z / 4.0)) < 1e-13


def test_order_one():
    # D_1(z) = z e^{-z^2/4}
    assert rel_err(pcf_d(1.0, 1.5), 1.5 * math.exp(-0.5625)) < 1e-14
    assert rel_err(pcf_d(1.0, 1.5), 0.85467423709638451465) < 1e-14


def test_order_minus_one_is_erfc():
    # D_{-1}(z) = sqrt(pi/2) e^{z^2/4} erfc(z/sqrt 2)
    for z in (1.0, 0.3, -2.0, 2.5):
        want = math.sqrt(math.pi / 2.0) * math.exp(z * z / 4.0) * erfc(z / math.sqrt(2.0))
        assert rel_err(pcf_d(-1.0, z), want) < 1e-13


def test_value_at_zero():
    # D_mu(0) = 2^{mu/2} sqrt(pi) / Gamma((1-mu)/2)
    for mu in (-1.7, -0.5, 0.25, 0.5, 2.3):
        want = 2.0 ** (mu / 2.0) * SQRT_PI * reciprocal_gamma((1.0 - mu) / 2.0)
        assert rel_err(pcf_d(mu, 0.0), complex(want)) < 1e-14
    # odd positive integer order: the prefactor pole makes it vanish
    assert abs(pcf_d(1.0, 0.0)) == 0.0
    assert abs(pcf_d(3.0, 0.0)) == 0.0


def test_frozen_oracle_points():
    # 25-digit oracle, both small-z series and large-z integral routes
    assert rel_err(pcf_d(0.25, 1.5), 0.64971951274600949688) < 1e-13
    assert rel_err(pcf_d(-1.5, 0.8), 0.48105066235833828511) < 1e-13
    assert rel_err(pcf_d(-0.5, 10.0), 4.3756306267890676714e-12) < 1e-12
    assert rel_err(pcf_d(1.5, 6.0), 0.0017949478241013083085) < 1e-12
    assert rel_err(pcf_d(0.7, -3.2), -1.5819305662756600529) < 1e-13


def test_recurrence_small_z():
    for nu in (-1.5, -0.5, 0.5, 1.5):
        for z in (0.1, 0.5, 2.0, -1.3):
            lhs = z * pcf_d(nu, z)
            rhs = pcf_d(nu + 1.0, z) + nu * pcf_d(nu - 1.0, z)
            assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(lhs))


def test_recurrence_large_z():
    # crosses the series/integral route boundary
    for nu in (-1.5, -0.5, 0.5, 1.5):
        for z in (4.5, 6.0, 10.0):
            lhs = z * pcf_d(nu, z)
            rhs = pcf_d(nu + 1.0, z) + nu * pcf_d(nu - 1.0, z)
            assert abs(lhs - rhs) < 1e-11 * max(abs(lhs), abs(pcf_d(nu + 1.0, z)))


def test_route_agreement_at_boundary():
    # the series route still has ~11 good digits at z=3.2; the integral
    # route must agree to within the series' own cancellation loss
    from lapcyl.special.pcf import _pcf_series, _pcf_integral
    from lapcyl.special.hyper import DEFAULT_CONTROL
    for nu in (-1.3, -0.5, 0.6):
        series = _pcf_series(complex(nu), complex(3.2), DEFAULT_CONTROL)
        integral = _pcf_integral(nu, 3.2)
        assert rel_err(integral, series) < 1e-11


def test_reflection_combinations():
    # D_nu(-z) - D_nu(z) and the odd Kummer series must match
    from lapcyl.special import kummer_phi
    for nu in (-1.5, -0.7, 0.5):
        for z in (0.4, 1.1, 2.2):
            diff = pcf_d(nu, -z) - pcf_d(nu, z)
            want = (z * 2.0 ** ((nu + 3.0) / 2.0) * SQRT_PI
                    * reciprocal_gamma(-nu / 2.0)
                    * math.exp(-z * z / 4.0)
                    * kummer_phi((1.0 - nu) / 2.0, 1.5, z * z / 2.0))
            assert rel_err(diff, want) < 1e-12


def test_domain_cap():
    with pytest.raises(DomainError):
        pcf_d(0.5, 41.0)
    with pytest.raises(DomainError):
        pcf_d(0.5, -45.0)


def test_conjugate_symmetry():
    nu = 0.3 + 0.4j
    z = 1.2
    a = pcf_d(nu, z)
    b = pcf_d(nu.conjugate(), z)
    assert rel_err(a.conjugate(), b) < 1e-13


@settings(max_examples=40, deadline=None, derandomize=True)
@given(st.floats(min_value=-1.9, max_value=1.9),
       st.floats(min_value=-3.5, max_value=3.5))
def test_recurrence_property(nu, z):
    lhs = z * pcf_d(nu, z)
    rhs = pcf_d(nu + 1.0, z) + nu * pcf_d(nu - 1.0, z)
    scale = max(abs(lhs), abs(pcf_d(nu + 1.0, z)), 1e-3)
    assert abs(lhs - rhs) < 1e-11 * scale
