"""Quadrature engine: node tables, endpoint substitutions, honesty."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lapcyl import NonConvergence
from lapcyl.quad import (
    QuadratureSpec,
    integrate_finite,
    integrate_semi_infinite,
    laplace_forward,
    _NODES,
    _WEIGHTS_K,
    _WEIGHTS_G,
    _GAUSS_IDX,
)
from lapcyl.special import gamma

SQRT_PI = math.sqrt(math.pi)


def rel_err(got, want):
    return abs(got - want) / max(abs(want), 1e-300)


def test_kronrod_rule_degree():
    # 15-point Kronrod is exact through degree 22 on [-1, 1]
    for k in range(23):
        exact = 2.0 / (k + 1) if k % 2 == 0 else 0.0
        got = float(np.dot(_WEIGHTS_K, _NODES ** k))
        assert abs(got - exact) < 5e-14, k


def test_gauss_rule_degree():
    # embedded 7-point Gauss is exact through degree 13
    for k in range(14):
        exact = 2.0 / (k + 1) if k % 2 == 0 else 0.0
        got = float(np.dot(_WEIGHTS_G, _NODES[_GAUSS_IDX] ** k))
        assert abs(got - exact) < 5e-14, k


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(lower=1.0, upper=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(lower=0.0, upper=1.0, exponent_at_lower=-1.0)
    with pytest.raises(ValueError):
        QuadratureSpec(lower=0.0, upper=1.0, exponent_at_upper=-1.5)
    with pytest.raises(ValueError):
        QuadratureSpec(lower=0.0, upper=1.0, rel_tol=1e-14)
    with pytest.raises(ValueError):
        QuadratureSpec(lower=0.0, upper=1.0, max_subdivisions=0)
    with pytest.raises(ValueError):
        QuadratureSpec(lower=-math.inf, upper=1.0)


def test_smooth_finite():
    spec = QuadratureSpec(lower=0.0, upper=math.pi)
    res = integrate_finite(lambda t: np.sin(t), spec)
    assert res.converged
    assert rel_err(res.value, 2.0) < 1e-13
    assert res.evaluations >= 30


def test_beta_integrals_plain_f():
    # int_0^1 t^(p-1)(1-t)^(q-1) dt = B(p, q); a plain f(t) integrand can
    # only resolve mild exponents, since the sub-epsilon neighborhood of
    # an endpoint holds (eps)^(1+lambda) of the mass and f(t) cannot see
    # inside it
    cases = [(0.75, 0.75), (0.5, 0.5), (0.5, 1.5), (0.3, 1.7)]
    for p, q in cases:
        spec = QuadratureSpec(lower=0.0, upper=1.0,
                              exponent_at_lower=p - 1.0, exponent_at_upper=q - 1.0,
                              rel_tol=1e-11)
        res = integrate_finite(lambda t: t ** (p - 1.0) * (1.0 - t) ** (q - 1.0), spec)
        want = (gamma(p) * gamma(q) / gamma(p + q)).real
        assert res.converged
        assert rel_err(res.value, want) < 1e-10, (p, q)


def test_beta_integrals_distance_form():
    # strong exponents need the exact-displacement signature
    cases = [(0.75, 0.25), (0.25, 0.75), (1.25, 0.1), (0.1, 0.35)]
    for p, q in cases:
        spec = QuadratureSpec(lower=0.0, upper=1.0,
                              exponent_at_lower=p - 1.0, exponent_at_upper=q - 1.0,
                              rel_tol=1e-12)
        res = integrate_finite(
            lambda t, lo, hi: lo ** (p - 1.0) * hi ** (q - 1.0),
            spec, distance_form=True)
        want = (gamma(p) * gamma(q) / gamma(p + q)).real
        assert res.converged
        assert rel_err(res.value, want) < 1e-11, (p, q)


def test_beta_quarter_closed_form():
    # B(3/4, 1/4) = pi sqrt(2)
    spec = QuadratureSpec(lower=0.0, upper=1.0,
                          exponent_at_lower=-0.25, exponent_at_upper=-0.75,
                          rel_tol=1e-12)
    res = integrate_finite(lambda t, lo, hi: lo ** -0.25 * hi ** -0.75,
                           spec, distance_form=True)
    assert rel_err(res.value, math.pi * math.sqrt(2.0)) < 1e-11
    assert rel_err(res.value, 4.442882938158366247) < 1e-11


def test_distance_form_beats_naive_near_endpoint():
    # with distance_form the (1-t) factor never suffers cancellation
    p, q = 0.5, 0.25
    spec = QuadratureSpec(lower=0.0, upper=1.0,
                          exponent_at_lower=p - 1.0, exponent_at_upper=q - 1.0,
                          rel_tol=1e-12)
    res = integrate_finite(
        lambda t, d_lo, d_hi: d_lo ** (p - 1.0) * d_hi ** (q - 1.0),
        spec, distance_form=True)
    want = (gamma(p) * gamma(q) / gamma(p + q)).real
    assert rel_err(res.value, want) < 1e-12


def test_gamma_integrals_semi_infinite():
    for s in (0.25, 0.5, 1.5, 3.0):
        spec = QuadratureSpec(lower=0.0, upper=math.inf,
                              exponent_at_lower=s - 1.0, decay_rate=1.0,
                              rel_tol=1e-12)
        res = integrate_semi_infinite(lambda t: t ** (s - 1.0) * np.exp(-t), spec)
        assert res.converged
        assert rel_err(res.value, gamma(s).real) < 1e-11, s


def test_gaussian_tail():
    spec = QuadratureSpec(lower=0.0, upper=math.inf, decay_rate=2.0, rel_tol=1e-12)
    res = integrate_semi_infinite(lambda t: np.exp(-t * t), spec)
    assert rel_err(res.value, 0.5 * SQRT_PI) < 1e-12


def test_shifted_lower_endpoint():
    # int_2^inf e^{-t} (t-2)^{-1/2} dt = sqrt(pi) e^{-2}
    spec = QuadratureSpec(lower=2.0, upper=math.inf,
                          exponent_at_lower=-0.5, decay_rate=1.0, rel_tol=1e-12)
    res = integrate_semi_infinite(
        lambda t, d_lo, d_hi: np.exp(-t) / np.sqrt(d_lo), spec, distance_form=True)
    assert rel_err(res.value, SQRT_PI * math.exp(-2.0)) < 1e-11


def test_error_estimate_honesty():
    # true error should rarely exceed 10x the reported estimate
    cases = []
    for p, q in [(0.75, 0.25), (0.5, 0.5), (0.3, 1.7), (1.5, 2.5), (0.9, 0.1)]:
        spec = QuadratureSpec(lower=0.0, upper=1.0,
                              exponent_at_lower=p - 1.0, exponent_at_upper=q - 1.0)
        res = integrate_finite(lambda t, lo, hi, p=p, q=q: lo ** (p - 1.0) * hi ** (q - 1.0),
                               spec, distance_form=True)
        want = (gamma(p) * gamma(q) / gamma(p + q)).real
        cases.append((abs(res.value - want), res.error_estimate))
    for s in (0.25, 1.5, 3.0, 4.5, 0.8):
        spec = QuadratureSpec(lower=0.0, upper=math.inf,
                              exponent_at_lower=s - 1.0, decay_rate=1.0)
        res = integrate_semi_infinite(lambda t, s=s: t ** (s - 1.0) * np.exp(-t), spec)
        cases.append((abs(res.value - gamma(s).real), res.error_estimate))
    bad = sum(1 for true, est in cases if true > 10.0 * est + 1e-15)
    assert bad == 0, cases


def test_nonconvergence_carries_partial():
    # interior |t - 0.3|^{-1/2} needs endless splitting with a budget of 3
    spec = QuadratureSpec(lower=0.0, upper=1.0, max_subdivisions=3)
    with pytest.raises(NonConvergence) as exc:
        integrate_finite(lambda t: 1.0 / np.sqrt(np.abs(t - 0.3)), spec)
    partial = exc.value.result
    assert partial is not None
    assert not partial.converged
    assert partial.evaluations > 0


def test_laplace_power():
    # L[t^{nu-1}](p) = Gamma(nu) / p^nu
    for nu, p in [(0.5, 1.0), (0.25, 2.0), (1.5, 0.5)]:
        hints = QuadratureSpec(lower=0.0, upper=math.inf,
                               exponent_at_lower=nu - 1.0, rel_tol=1e-12)
        got = laplace_forward(lambda t: t ** (nu - 1.0), 0.0, math.inf, p, hints)
        want = gamma(nu) / p ** nu
        assert rel_err(got, want) < 1e-11, (nu, p)


def test_laplace_finite_support():
    # L[1 on [0, x]] = (1 - e^{-px})/p
    got = laplace_forward(lambda t: np.ones_like(t), 0.0, 2.0, 1.5)
    want = (1.0 - math.exp(-3.0)) / 1.5
    assert rel_err(got, want) < 1e-12


def test_laplace_two_piece_product_transform():
    # piecewise original whose transform is e^{py} erfc(sqrt(yp)) erf(sqrt(xp));
    # here x=1, y=2, p=1 giving e^2 erfc(sqrt 2) erf(1)
    x, y, p = 1.0, 2.0, 1.0

    def original(t):
        t = np.asarray(t)
        left = np.sqrt(y) / (np.sqrt(np.abs(t)) * (y + t)) / math.pi
        right = -np.sqrt(x) / (np.sqrt(np.abs(y + t - x)) * (y + t)) / math.pi
        return np.where(t < x, left, right)

    hints = QuadratureSpec(lower=0.0, upper=math.inf,
                           exponent_at_lower=-0.5, rel_tol=1e-11)
    got = laplace_forward(original, 0.0, math.inf, p, hints, breakpoints=(x,))
    assert rel_err(got, 0.28331937945439961783) < 1e-9


def test_laplace_rejects_bad_p():
    with pytest.raises(ValueError):
        laplace_forward(lambda t: t, 0.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        laplace_forward(lambda t: t, 0.0, 1.0, 1.0, breakpoints=(2.0,))


def test_additivity():
    spec_full = QuadratureSpec(lower=0.0, upper=3.0, rel_tol=1e-12)
    f = lambda t: np.exp(-t) * np.cos(3.0 * t)
    full = integrate_finite(f, spec_full).value
    parts = 0.0
    for lo, hi in [(0.0, 0.7), (0.7, 3.0)]:
        parts += integrate_finite(f, QuadratureSpec(lower=lo, upper=hi, rel_tol=1e-12)).value
    assert abs(full - parts) < 1e-12


@settings(max_examples=30, deadline=None, derandomize=True)
@given(st.floats(min_value=-3.0, max_value=3.0),
       st.floats(min_value=-3.0, max_value=3.0))
def test_linearity(alpha, beta):
    spec = QuadratureSpec(lower=0.0, upper=1.0)
    f = lambda t: np.sin(t)
    g = lambda t: t * t
    combo = integrate_finite(lambda t: alpha * f(t) + beta * g(t), spec).value
    separate = alpha * integrate_finite(f, spec).value + beta * integrate_finite(g, spec).value
    assert abs(combo - separate) < 1e-10 * max(1.0, abs(alpha) + abs(beta))


def test_determinism():
    spec = QuadratureSpec(lower=0.0, upper=1.0, exponent_at_lower=-0.5)
    f = lambda t: np.cos(5.0 * t) / np.sqrt(t)
    a = integrate_finite(f, spec)
    b = integrate_finite(f, spec)
    assert a.value == b.value
    assert a.evaluations == b.evaluations
