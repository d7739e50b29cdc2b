"""The identity catalog: every case the harness certifies.

Conventions
-----------
* Laplace pairs: `image` is the transform-domain closed form; each
  integral piece supplies the original WITHOUT the e^{-pt} kernel,
  which the engine multiplies in.  Direct integrals carry their whole
  integrand.  Constant prefactors are folded into the integrand
  closures at build time, so a Piece is just (support, f, spec).
* Integrands receive (t, d_lo, d_hi) arrays, d_lo/d_hi the exact
  displacements from the endpoints.  Powers of displacements must use
  d_lo/d_hi, never t - endpoint, or accuracy dies at strong endpoint
  exponents.
* Parameter packing: two-order cases read (mu, nu) from orders and use
  x, y, p literally.  Error-function cases use a = sqrt(y), b = sqrt(x).
  Single-parameter transforms mirror their lone scale into both x and y
  so grid files stay uniform.  Reduction cases note their packing
  inline.
* NEG-* cases encode published-but-wrong right-hand sides on purpose;
  the harness must reject them, and the exit-code layer treats that
  rejection as success.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from ..quad import QuadratureSpec
from ..special import (
    appell_f1,
    erf,
    erfc,
    gamma,
    gauss_2f1,
    gauss_2f1_at_one,
    gauss_2f1_cm,
    hyp_2f2,
    kummer_phi,
    pcf_d,
    reciprocal_gamma,
)
from .model import IdentityCase, ParamPoint, Piece

__all__ = ["REGISTRY", "registry_order"]

rg = reciprocal_gamma
_RPI = math.sqrt(math.pi)

# Internal quadrature tolerances: two to three decades tighter than the
# loosest case tolerance so the verification error is dominated by the
# identities, not the integrator.
_REL = 1e-11
_ABS = 1e-15


def _spec(lower, upper, lam_lo=0.0, lam_up=0.0, decay=0.0):
    return QuadratureSpec(
        lower=float(lower),
        upper=float(upper),
        exponent_at_lower=float(lam_lo),
        exponent_at_upper=float(lam_up),
        decay_rate=float(decay),
        rel_tol=_REL,
        abs_tol=_ABS,
        max_subdivisions=2000,
    )


def _lam_one(explicit, cab):
    """Endpoint exponent where a 2F1 argument tends to 1.

    The complement scales like the displacement d, so F contributes an
    extra d^{cab} branch when Re(c-a-b) < 0 (a log factor at cab = 0,
    which plain adaptive refinement absorbs).
    """
    return explicit + min(0.0, cab)


def _lam_inf(explicit, fa, fb):
    """Endpoint exponent where a 2F1 argument tends to -infinity.

    |F| ~ |w|^{-min(Re a, Re b)} with |w| ~ 1/d; the 0 keeps the
    estimate conservative when both parameters are positive.
    """
    return explicit + min(0.0, fa, fb)


def _times(c, f):
    def g(t, d_lo, d_hi):
        return c * f(t, d_lo, d_hi)

    return g


def _masked_2f2(a1, a2, b1, b2, z):
    """2F2 on a float array, zeroed where z > 200.

    Used only inside Gaussian-damped integrands whose damping exponent
    is at least 2z, so the dropped region contributes below e^{-200};
    evaluating the series there would overflow instead.
    """
    z = np.asarray(z)
    out = np.zeros(z.shape, dtype=complex)
    m = z <= 200.0
    if m.any():
        out[m] = hyp_2f2(a1, a2, b1, b2, z[m])
    return out


def _grid(orders_list, xy_list, p_list):
    return tuple(
        ParamPoint(orders=o, x=float(xx), y=float(yy), p=float(pp))
        for o in orders_list
        for (xx, yy) in xy_list
        for pp in p_list
    )


_ORDER_SQUARE = tuple(itertools.product((-1.5, -1.0, -0.5), repeat=2))
_XY_THREE = ((0.5, 2.0), (1.0, 1.0), (2.0, 0.5))
_XY_NINE = tuple(itertools.product((0.5, 1.0, 2.0), repeat=2))
_ERF_AB = tuple(
    ParamPoint(orders=(), x=b * b, y=a * a, p=1.0)
    for a in (0.25, 0.5, 1.0, 2.0)
    for b in (0.25, 0.5, 1.0, 2.0)
)

REGISTRY: dict = {}


def _add(case: IdentityCase):
    if case.id in REGISTRY:
        raise ValueError(f"duplicate case id {case.id}")
    REGISTRY[case.id] = case


def registry_order():
    return tuple(REGISTRY)


# ----------------------------------------------------------------------
# Building-block transforms
# ----------------------------------------------------------------------

def _pcf_block_image(pt, p):
    a = pt.y
    return gamma(pt.nu) * math.exp(0.5 * a * p) * pcf_d(-2.0 * pt.nu, math.sqrt(2.0 * a * p))


def _pcf_block_original(pt):
    nu, a = pt.nu, pt.y
    c = 2.0 ** (-nu) * math.sqrt(a)

    def f(t, d_lo, d_hi):
        return c * t ** (nu - 1.0) * (t + a) ** (-nu - 0.5)

    return (Piece((0.0, math.inf), f, _spec(0.0, math.inf, lam_lo=nu - 1.0)),)


def _v_pcf_block(pt):
    if not (pt.nu > 0.0 and pt.y > 0.0 and pt.p > 0.0):
        return "requires nu > 0, a > 0, p > 0"
    return None


_add(IdentityCase(
    id="ILT-PCF-BLOCK",
    kind="laplace_pair",
    label="Gamma[nu] e^{ap/2} D_{-2nu}(sqrt(2ap)), algebraic original on (0,inf)",
    image=_pcf_block_image,
    original=_pcf_block_original,
    validity=_v_pcf_block,
    default_grid=_grid([(v,) for v in (0.25, 0.5, 1.0)],
                       [(a, a) for a in (0.5, 1.0, 2.0)], (0.5, 1.0, 3.0)),
    tol=1e-9,
))


def _pcf_block2_image(pt, p):
    a = pt.y
    return gamma(pt.nu) * math.exp(0.5 * a * p) / math.sqrt(p) * pcf_d(
        1.0 - 2.0 * pt.nu, math.sqrt(2.0 * a * p))


def _pcf_block2_original(pt):
    nu, a = pt.nu, pt.y
    c = 2.0 ** (0.5 - nu)

    def f(t, d_lo, d_hi):
        return c * t ** (nu - 1.0) * (t + a) ** (0.5 - nu)

    return (Piece((0.0, math.inf), f, _spec(0.0, math.inf, lam_lo=nu - 1.0)),)


_add(IdentityCase(
    id="ILT-PCF-BLOCK2",
    kind="laplace_pair",
    label="Gamma[nu] p^{-1/2} e^{ap/2} D_{1-2nu}(sqrt(2ap)), original on (0,inf)",
    image=_pcf_block2_image,
    original=_pcf_block2_original,
    validity=_v_pcf_block,
    default_grid=_grid([(v,) for v in (0.25, 0.5, 1.0)],
                       [(a, a) for a in (0.5, 1.0, 2.0)], (0.5, 1.0, 3.0)),
    tol=1e-9,
))


def _kum_block_image(pt, p):
    x = pt.x
    return math.exp(-x * p) * kummer_phi(pt.nu, pt.nu + 1.25, x * p)


def _kum_block_original(pt):
    nu, x = pt.nu, pt.x
    c = x ** (-nu - 0.25) * gamma(nu + 1.25) * rg(1.25) * rg(nu)

    def f(t, d_lo, d_hi):
        return c * t ** 0.25 * d_hi ** (nu - 1.0)

    return (Piece((0.0, x), f, _spec(0.0, x, lam_lo=0.25, lam_up=nu - 1.0)),)


def _v_kum_block(pt):
    if not (pt.nu > 0.0 and pt.x > 0.0 and pt.p > 0.0):
        return "requires nu > 0, x > 0, p > 0"
    return None


_add(IdentityCase(
    id="ILT-KUM-BLOCK",
    kind="laplace_pair",
    label="e^{-xp} Phi(nu; nu+5/4; xp), beta-type original on (0,x)",
    image=_kum_block_image,
    original=_kum_block_original,
    validity=_v_kum_block,
    default_grid=_grid([(v,) for v in (0.25, 0.5, 1.0)],
                       [(x, x) for x in (0.5, 1.0, 2.0)], (0.5, 1.0, 3.0)),
    tol=1e-9,
))


def _kum32_image(pt, p):
    nu, x = pt.nu, pt.x
    return (math.sqrt(x) * 2.0 / _RPI * gamma(1.0 + nu / 2.0) * gamma((1.0 - nu) / 2.0)
            * math.exp(-x * p) * kummer_phi((1.0 - nu) / 2.0, 1.5, p * x))


def _kum32_original(pt):
    nu, x = pt.nu, pt.x

    def f(t, d_lo, d_hi):
        return t ** (nu / 2.0) * d_hi ** (-(1.0 + nu) / 2.0)

    return (Piece((0.0, x), f,
                  _spec(0.0, x, lam_lo=nu / 2.0, lam_up=-(1.0 + nu) / 2.0)),)


def _v_kum32(pt):
    if not (-2.0 < pt.nu < 1.0):
        return "requires -2 < nu < 1"
    if not (pt.x > 0.0 and pt.p > 0.0):
        return "requires x > 0, p > 0"
    return None


_add(IdentityCase(
    id="ILT-KUM-BLOCK-32",
    kind="laplace_pair",
    label="e^{-xp} Phi((1-nu)/2; 3/2; px) scaled, original t^{nu/2}(x-t)^{-(1+nu)/2}",
    image=_kum32_image,
    original=_kum32_original,
    validity=_v_kum32,
    default_grid=_grid([(v,) for v in (-1.5, -0.5, 0.5)],
                       [(x, x) for x in (0.5, 1.0, 2.0)], (0.5, 1.0, 3.0)),
    tol=1e-9,
))


def _kum12_image(pt, p):
    nu, x = pt.nu, pt.x
    return (x ** -0.5 / _RPI * gamma((1.0 + nu) / 2.0) * gamma(-nu / 2.0)
            * math.exp(-x * p) * kummer_phi(-nu / 2.0, 0.5, x * p))


def _kum12_original(pt):
    nu, x = pt.nu, pt.x

    def f(t, d_lo, d_hi):
        return t ** ((nu - 1.0) / 2.0) * d_hi ** (-nu / 2.0 - 1.0)

    return (Piece((0.0, x), f,
                  _spec(0.0, x, lam_lo=(nu - 1.0) / 2.0, lam_up=-nu / 2.0 - 1.0)),)


def _v_kum12(pt):
    if not (-1.0 < pt.nu < 0.0):
        return "requires -1 < nu < 0"
    if not (pt.x > 0.0 and pt.p > 0.0):
        return "requires x > 0, p > 0"
    return None


_add(IdentityCase(
    id="ILT-KUM-BLOCK-12",
    kind="laplace_pair",
    label="e^{-xp} Phi(-nu/2; 1/2; xp) scaled, original t^{(nu-1)/2}(x-t)^{-nu/2-1}",
    image=_kum12_image,
    original=_kum12_original,
    validity=_v_kum12,
    default_grid=_grid([(v,) for v in (-0.75, -0.5, -0.25)],
                       [(x, x) for x in (0.5, 1.0, 2.0)], (0.5, 1.0, 3.0)),
    tol=1e-9,
))


# ----------------------------------------------------------------------
# Two-order product transforms: shared integrand factories
# ----------------------------------------------------------------------

def _t31_f1(pt):
    """(0,x) integrand common to the difference/sum/single families."""
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    fa, fb, fc = -mu / 2.0, (1.0 + nu) / 2.0, 1.0 + (nu - mu) / 2.0

    def f(t, d_lo, d_hi):
        yt = y + t
        cm = x * y / (d_hi * yt)
        F = gauss_2f1_cm(fa, fb, fc, cm)
        return t ** ((nu - mu) / 2.0) * d_hi ** (-(1.0 + nu) / 2.0) * yt ** (mu / 2.0) * F

    return f, (nu - mu) / 2.0, _lam_inf(-(1.0 + nu) / 2.0, fa, fb)


def _t31_f2(pt):
    """(x,inf) integrand with the 3/2-kind hypergeometric kernel."""
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    s = mu + nu
    fa, fb = (1.0 - mu) / 2.0, (1.0 - nu) / 2.0

    def f(t, d_lo, d_hi):
        yd = y + d_lo  # equals y - x + t exactly
        cm = d_lo * (y + t) / (t * yd)
        F = gauss_2f1_cm(fa, fb, 1.5, cm)
        return (t ** ((nu - 1.0) / 2.0) * d_lo ** (-(1.0 + s) / 2.0)
                * yd ** ((mu - 1.0) / 2.0) * F)

    return f, _lam_one(-(1.0 + s) / 2.0, (1.0 + s) / 2.0)


def _t33_f2(pt):
    """(x,inf) integrand with the 1/2-kind hypergeometric kernel."""
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    s = mu + nu

    def f(t, d_lo, d_hi):
        yd = y + d_lo
        cm = d_lo * (y + t) / (t * yd)
        F = gauss_2f1_cm(-mu / 2.0, -nu / 2.0, 0.5, cm)
        return t ** (nu / 2.0) * d_lo ** (-(1.0 + s) / 2.0) * yd ** (mu / 2.0) * F

    return f, _lam_one(-(1.0 + s) / 2.0, (1.0 + s) / 2.0)


def _pcf_pair(mu, nu, x, y, p):
    return pcf_d(mu, math.sqrt(2.0 * y * p)), pcf_d(nu, math.sqrt(2.0 * x * p)), pcf_d(
        nu, -math.sqrt(2.0 * x * p))


def _v_thm31(pt):
    if not (pt.x > 0.0 and pt.y > 0.0 and pt.p > 0.0):
        return "requires x > 0, y > 0, p > 0"
    if not pt.nu < 1.0:
        return "requires Re nu < 1"
    if not pt.mu < min(1.0 - pt.nu, 2.0 + pt.nu):
        return "requires Re mu < min(1 - nu, 2 + nu)"
    return None


def _t31_image(pt, p):
    dmu, dplus, dminus = _pcf_pair(pt.mu, pt.nu, pt.x, pt.y, p)
    return math.exp(0.5 * p * (pt.y - pt.x)) / math.sqrt(p) * dmu * (dminus - dplus)


def _t31_original(pt):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    f1, l1, u1 = _t31_f1(pt)
    c1 = 2.0 ** ((mu - nu) / 2.0) * _RPI * rg(1.0 + (nu - mu) / 2.0) * rg(-nu)
    f2, l2 = _t31_f2(pt)
    c2 = 2.0 ** (2.0 + (mu + nu) / 2.0) * _RPI * math.sqrt(x * y) * rg(-mu / 2.0) * rg(-nu / 2.0)
    return (
        Piece((0.0, x), _times(c1, f1), _spec(0.0, x, lam_lo=l1, lam_up=u1)),
        Piece((x, math.inf), _times(c2, f2), _spec(x, math.inf, lam_lo=l2)),
    )


_add(IdentityCase(
    id="T31-DIFF-HALF",
    kind="laplace_pair",
    label="p^{-1/2} e^{p(y-x)/2} D_mu(sqrt(2yp)) [D_nu(-sqrt(2xp)) - D_nu(sqrt(2xp))]",
    image=_t31_image,
    original=_t31_original,
    validity=_v_thm31,
    default_grid=_grid(_ORDER_SQUARE,
                       tuple(itertools.product((0.5, 1.0), (0.5, 2.0))),
                       (0.5, 1.0, 3.0)),
    tol=1e-8,
))


def _t31k_image(pt, p):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    return (math.exp(0.5 * p * y - p * x) * pcf_d(mu, math.sqrt(2.0 * y * p))
            * kummer_phi((1.0 - nu) / 2.0, 1.5, p * x))


def _t31k_original(pt):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    f1, l1, u1 = _t31_f1(pt)
    c1 = 2.0 ** (mu / 2.0 - 1.0) * _RPI / math.sqrt(x) * rg(1.0 + (nu - mu) / 2.0) * rg((1.0 - nu) / 2.0)
    f2, l2 = _t31_f2(pt)
    c2 = 2.0 ** (mu / 2.0) * math.sqrt(y) * rg(-mu / 2.0)
    return (
        Piece((0.0, x), _times(c1, f1), _spec(0.0, x, lam_lo=l1, lam_up=u1)),
        Piece((x, math.inf), _times(c2, f2), _spec(x, math.inf, lam_lo=l2)),
    )


def _v_t31k(pt):
    if not (pt.x > 0.0 and pt.y > 0.0 and pt.p > 0.0):
        return "requires x > 0, y > 0, p > 0"
    if not pt.mu < 0.0:
        return "requires Re mu < 0"
    if not (-2.0 < pt.nu < 1.0):
        return "requires -2 < Re nu < 1"
    return None


_add(IdentityCase(
    id="T31-KUMMER",
    kind="laplace_pair",
    label="e^{py/2-px} D_mu(sqrt(2yp)) Phi((1-nu)/2; 3/2; px)",
    image=_t31k_image,
    original=_t31k_original,
    validity=_v_t31k,
    default_grid=_grid(tuple(itertools.product((-1.5, -1.0, -0.5), (-1.5, -0.5, 0.5))),
                       ((0.5, 2.0), (1.0, 1.0)), (0.5, 3.0)),
    tol=1e-8,
))


def _t32_image(pt, p):
    dmu, dplus, dminus = _pcf_pair(pt.mu, pt.nu, pt.x, pt.y, p)
    return math.exp(0.5 * p * (pt.y - pt.x)) * dmu * (dminus - dplus)


def _t32_original(pt):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    s = mu + nu

    fa1, fb1, fc1 = -(1.0 + mu) / 2.0, (1.0 + nu) / 2.0, (1.0 - mu + nu) / 2.0
    c1 = 2.0 ** ((mu - nu) / 2.0) * _RPI / math.sqrt(y) * rg(fc1) * rg(-nu)

    def f1(t, d_lo, d_hi):
        yt = y + t
        cm = x * y / (d_hi * yt)
        brace = (gauss_2f1_cm(fa1, fb1, fc1, cm)
                 + mu * t / ((1.0 - mu + nu) * yt) * gauss_2f1_cm(fa1 + 1.0, fb1, fc1 + 1.0, cm))
        return t ** (-(1.0 + mu - nu) / 2.0) * d_hi ** (-(1.0 + nu) / 2.0) * yt ** ((1.0 + mu) / 2.0) * brace

    l1 = -(1.0 + mu - nu) / 2.0
    u1 = _lam_inf(-(1.0 + nu) / 2.0, fa1, fb1)

    c2 = 2.0 ** (2.0 + s / 2.0) * _RPI * math.sqrt(x) * rg(-(1.0 + mu) / 2.0) * rg(-nu / 2.0)

    def f2(t, d_lo, d_hi):
        yd = y + d_lo
        cm = d_lo * (y + t) / (t * yd)
        brace = (gauss_2f1_cm(-mu / 2.0, (1.0 - nu) / 2.0, 1.5, cm)
                 - mu * d_lo / ((1.0 + mu) * yd) * gauss_2f1_cm((2.0 - mu) / 2.0, (1.0 - nu) / 2.0, 1.5, cm))
        return t ** ((nu - 1.0) / 2.0) * d_lo ** (-(2.0 + s) / 2.0) * yd ** (mu / 2.0) * brace

    # second brace term carries an extra d_lo, so its endpoint branch is milder
    l2 = min(_lam_one(-(2.0 + s) / 2.0, (2.0 + s) / 2.0), _lam_one(-s / 2.0, s / 2.0))

    return (
        Piece((0.0, x), _times(c1, f1), _spec(0.0, x, lam_lo=l1, lam_up=u1)),
        Piece((x, math.inf), _times(c2, f2), _spec(x, math.inf, lam_lo=l2)),
    )


def _v_t32(pt):
    if not (pt.x > 0.0 and pt.y > 0.0 and pt.p > 0.0):
        return "requires x > 0, y > 0, p > 0"
    if not pt.nu < 1.0:
        return "requires Re nu < 1"
    if not pt.mu < min(-pt.nu, 1.0 + pt.nu):
        return "requires Re mu < min(-nu, 1 + nu)"
    if pt.mu == -1.0:
        return "requires mu != -1 (coefficient pole)"
    return None


_add(IdentityCase(
    id="T32-DIFF",
    kind="laplace_pair",
    label="e^{p(y-x)/2} D_mu(sqrt(2yp)) [D_nu(-sqrt(2xp)) - D_nu(sqrt(2xp))]",
    image=_t32_image,
    original=_t32_original,
    validity=_v_t32,
    default_grid=_grid(((-0.75, -0.5), (-1.25, -0.5), (-0.75, -0.25), (-1.25, -1.5)),
                       _XY_THREE, (0.5, 1.0, 3.0)),
    tol=1e-8,
))


def _c321_image(pt, p):
    x, y = pt.x, pt.y
    return math.exp(p * y) * erfc(math.sqrt(y * p)) * erf(math.sqrt(x * p))


def _c321_original(pt):
    x, y = pt.x, pt.y

    def f1(t, d_lo, d_hi):
        return math.sqrt(y) / math.pi / (np.sqrt(t) * (y + t))

    def f2(t, d_lo, d_hi):
        return -math.sqrt(x) / math.pi / (np.sqrt(y + d_lo) * (y + t))

    return (
        Piece((0.0, x), f1, _spec(0.0, x, lam_lo=-0.5)),
        Piece((x, math.inf), f2, _spec(x, math.inf)),
    )


def _v_pos_xyp(pt):
    if not (pt.x > 0.0 and pt.y > 0.0 and pt.p > 0.0):
        return "requires x > 0, y > 0, p > 0"
    return None


_add(IdentityCase(
    id="C321-ERF-MIX",
    kind="laplace_pair",
    label="e^{py} erfc(sqrt(yp)) erf(sqrt(xp)), rational originals",
    image=_c321_image,
    original=_c321_original,
    validity=_v_pos_xyp,
    default_grid=_grid([()], _XY_NINE, (0.5, 1.0, 3.0)),
    tol=1e-8,
))


def _c321rep_image(pt, p):
    return erfc(pt.a) * erf(pt.b)


def _c321rep_original(pt):
    x, y = pt.x, pt.y  # x = b^2, y = a^2
    c1 = math.sqrt(y) * math.exp(-y) / math.pi
    c2 = -math.sqrt(x) * math.exp(-(x + y)) / math.pi

    def f1(t, d_lo, d_hi):
        return c1 * np.exp(-t) / (np.sqrt(t) * (t + y))

    def f2(t, d_lo, d_hi):
        return c2 * np.exp(-t) / ((t + x + y) * np.sqrt(t + y))

    return (
        Piece((0.0, x), f1, _spec(0.0, x, lam_lo=-0.5)),
        Piece((0.0, math.inf), f2, _spec(0.0, math.inf, decay=1.0)),
    )


_add(IdentityCase(
    id="C321-REP",
    kind="direct_integral",
    label="erfc(a) erf(b) as two exponential integrals",
    image=_c321rep_image,
    original=_c321rep_original,
    validity=_v_pos_xyp,
    default_grid=_ERF_AB,
    tol=1e-9,
))


def _t33_image(pt, p):
    dmu, dplus, dminus = _pcf_pair(pt.mu, pt.nu, pt.x, pt.y, p)
    return math.exp(0.5 * p * (pt.y - pt.x)) / math.sqrt(p) * dmu * (dminus + dplus)


def _t33_original(pt):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    f1, l1, u1 = _t31_f1(pt)
    c1 = 2.0 ** ((mu - nu) / 2.0) * _RPI * rg(1.0 + (nu - mu) / 2.0) * rg(-nu)
    f2, l2 = _t33_f2(pt)
    c2 = 2.0 ** (1.0 + (mu + nu) / 2.0) * _RPI * rg((1.0 - nu) / 2.0) * rg((1.0 - mu) / 2.0)
    return (
        Piece((0.0, x), _times(c1, f1), _spec(0.0, x, lam_lo=l1, lam_up=u1)),
        Piece((x, math.inf), _times(c2, f2), _spec(x, math.inf, lam_lo=l2)),
    )


_add(IdentityCase(
    id="T33-SUM-HALF",
    kind="laplace_pair",
    label="p^{-1/2} e^{p(y-x)/2} D_mu(sqrt(2yp)) [D_nu(-sqrt(2xp)) + D_nu(sqrt(2xp))]",
    image=_t33_image,
    original=_t33_original,
    validity=_v_thm31,
    default_grid=_grid(_ORDER_SQUARE, _XY_THREE, (0.5, 3.0)),
    tol=1e-8,
))


def _t33k_image(pt, p):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    return (math.exp(0.5 * p * y - p * x) / math.sqrt(p) * pcf_d(mu, math.sqrt(2.0 * y * p))
            * kummer_phi(-nu / 2.0, 0.5, p * x))


def _t33k_original(pt):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    fa, fb, fc = (1.0 - mu) / 2.0, 1.0 + nu / 2.0, 1.0 + (nu - mu) / 2.0
    c1 = 2.0 ** (mu / 2.0) * _RPI * math.sqrt(x * y) * rg(fc) * rg(-nu / 2.0)

    def f1(t, d_lo, d_hi):
        yt = y + t
        cm = x * y / (d_hi * yt)
        F = gauss_2f1_cm(fa, fb, fc, cm)
        return t ** ((nu - mu) / 2.0) * d_hi ** (-1.0 - nu / 2.0) * yt ** ((mu - 1.0) / 2.0) * F

    l1 = (nu - mu) / 2.0
    u1 = _lam_inf(-1.0 - nu / 2.0, fa, fb)

    f2, l2 = _t33_f2(pt)
    c2 = 2.0 ** (mu / 2.0) * rg((1.0 - mu) / 2.0)
    return (
        Piece((0.0, x), _times(c1, f1), _spec(0.0, x, lam_lo=l1, lam_up=u1)),
        Piece((x, math.inf), _times(c2, f2), _spec(x, math.inf, lam_lo=l2)),
    )


def _v_t33k(pt):
    if not (pt.x > 0.0 and pt.y > 0.0 and pt.p > 0.0):
        return "requires x > 0, y > 0, p > 0"
    if not (-1.0 < pt.nu < 0.0):
        return "requires -1 < Re nu < 0"
    if not pt.mu < 1.0:
        return "requires Re mu < 1"
    return None


_add(IdentityCase(
    id="T33-KUMMER",
    kind="laplace_pair",
    label="p^{-1/2} e^{py/2-px} D_mu(sqrt(2yp)) Phi(-nu/2; 1/2; px)",
    image=_t33k_image,
    original=_t33k_original,
    validity=_v_t33k,
    default_grid=_grid(tuple(itertools.product((-1.4, -0.6, 0.4), (-0.7, -0.45, -0.2))),
                       ((0.5, 2.0), (1.0, 1.0)), (0.5, 3.0)),
    tol=1e-8,
))


def _t34_image(pt, p):
    dmu, dplus, dminus = _pcf_pair(pt.mu, pt.nu, pt.x, pt.y, p)
    return math.exp(0.5 * p * (pt.y - pt.x)) / math.sqrt(p) * dmu * dminus


def _t34_original(pt):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    s = mu + nu
    f1, l1, u1 = _t31_f1(pt)
    c1 = 2.0 ** ((mu - nu) / 2.0) * _RPI * rg(1.0 + (nu - mu) / 2.0) * rg(-nu)
    c2 = 2.0 ** (1.0 + s / 2.0) * _RPI * math.sqrt(x * y) * rg(-mu / 2.0) * rg(-nu / 2.0)
    # ratio between the two bracket kernels; finite because the rg zeros
    # cancel against the explicit gammas on the valid grid
    mix = gamma(-mu / 2.0) * gamma(-nu / 2.0) * rg((1.0 - mu) / 2.0) * rg((1.0 - nu) / 2.0)

    def f2(t, d_lo, d_hi):
        yd = y + d_lo
        cm = d_lo * (y + t) / (t * yd)
        brace = (gauss_2f1_cm((1.0 - mu) / 2.0, (1.0 - nu) / 2.0, 1.5, cm)
                 + mix * np.sqrt(t * yd / (4.0 * x * y))
                 * gauss_2f1_cm(-mu / 2.0, -nu / 2.0, 0.5, cm))
        return (t ** ((nu - 1.0) / 2.0) * d_lo ** (-(1.0 + s) / 2.0)
                * yd ** ((mu - 1.0) / 2.0) * brace)

    l2 = _lam_one(-(1.0 + s) / 2.0, (1.0 + s) / 2.0)
    return (
        Piece((0.0, x), _times(c1, f1), _spec(0.0, x, lam_lo=l1, lam_up=u1)),
        Piece((x, math.inf), _times(c2, f2), _spec(x, math.inf, lam_lo=l2)),
    )


_add(IdentityCase(
    id="T34-NEG-HALF",
    kind="laplace_pair",
    label="p^{-1/2} e^{p(y-x)/2} D_mu(sqrt(2yp)) D_nu(-sqrt(2xp))",
    image=_t34_image,
    original=_t34_original,
    validity=_v_thm31,
    default_grid=_grid(_ORDER_SQUARE, _XY_THREE, (0.5, 3.0)),
    tol=1e-8,
))


def _c341_image(pt, p):
    x = pt.x
    return math.exp(-0.5 * p * x) / math.sqrt(p) * pcf_d(pt.nu, -math.sqrt(2.0 * x * p))


def _c341_original(pt):
    nu, x = pt.nu, pt.x
    c1 = 2.0 ** (-nu / 2.0) * _RPI * rg(-nu) * rg(1.0 + nu / 2.0)
    c2 = 2.0 ** (nu / 2.0) * rg((1.0 - nu) / 2.0)

    def f1(t, d_lo, d_hi):
        return c1 * t ** (nu / 2.0) * d_hi ** (-(1.0 + nu) / 2.0)

    def f2(t, d_lo, d_hi):
        return c2 * t ** (nu / 2.0) * d_lo ** (-(1.0 + nu) / 2.0)

    return (
        Piece((0.0, x), f1, _spec(0.0, x, lam_lo=nu / 2.0, lam_up=-(1.0 + nu) / 2.0)),
        Piece((x, math.inf), f2, _spec(x, math.inf, lam_lo=-(1.0 + nu) / 2.0)),
    )


def _v_c341(pt):
    if not (pt.x > 0.0 and pt.p > 0.0):
        return "requires x > 0, p > 0"
    if not pt.nu < 1.0:
        return "requires Re nu < 1"
    return None


_add(IdentityCase(
    id="C341-SINGLE",
    kind="laplace_pair",
    label="p^{-1/2} e^{-px/2} D_nu(-sqrt(2xp)), two-piece original",
    image=_c341_image,
    original=_c341_original,
    validity=_v_c341,
    default_grid=_grid([(v,) for v in (-1.5, -0.5, 0.5)],
                       [(x, x) for x in (0.5, 1.0, 2.0)], (0.5, 1.0, 3.0)),
    tol=1e-8,
))


def _t35_image(pt, p):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    return (math.exp(0.5 * p * (y + x)) / math.sqrt(p)
            * pcf_d(mu, math.sqrt(2.0 * y * p)) * pcf_d(nu, math.sqrt(2.0 * x * p)))


def _t35_original(pt):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    s = mu + nu
    c = 2.0 ** (s / 2.0) * rg((1.0 - s) / 2.0)

    def f(t, d_lo, d_hi):
        xt = x + t
        yt = y + t
        cm = x * y / (xt * yt)
        F = gauss_2f1_cm(-mu / 2.0, -nu / 2.0, (1.0 - s) / 2.0, cm)
        return c * t ** (-(1.0 + s) / 2.0) * yt ** (mu / 2.0) * xt ** (nu / 2.0) * F

    return (Piece((0.0, math.inf), f, _spec(0.0, math.inf, lam_lo=-(1.0 + s) / 2.0)),)


def _v_t35(pt):
    if not (pt.x > 0.0 and pt.y > 0.0 and pt.p > 0.0):
        return "requires x > 0, y > 0, p > 0"
    if not pt.mu + pt.nu < 1.0:
        return "requires Re(mu + nu) < 1"
    return None


_add(IdentityCase(
    id="T35-POS-HALF",
    kind="laplace_pair",
    label="p^{-1/2} e^{p(y+x)/2} D_mu(sqrt(2yp)) D_nu(sqrt(2xp))",
    image=_t35_image,
    original=_t35_original,
    validity=_v_t35,
    default_grid=_grid(_ORDER_SQUARE, _XY_THREE, (0.5, 3.0)),
    tol=1e-8,
))


def _t36_image(pt, p):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    return (math.exp(0.5 * p * (y + x))
            * pcf_d(mu, math.sqrt(2.0 * y * p)) * pcf_d(nu, math.sqrt(2.0 * x * p)))


def _t36_original(pt):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    s = mu + nu
    c = 2.0 ** (s / 2.0) / math.sqrt(x) * rg(-s / 2.0)

    def f(t, d_lo, d_hi):
        xt = x + t
        yt = y + t
        cm = x * y / (xt * yt)
        brace = (gauss_2f1_cm(-mu / 2.0, -(1.0 + nu) / 2.0, -s / 2.0, cm)
                 - nu * t / (s * xt) * gauss_2f1_cm(-mu / 2.0, (1.0 - nu) / 2.0, 1.0 - s / 2.0, cm))
        return c * t ** (-1.0 - s / 2.0) * yt ** (mu / 2.0) * xt ** ((1.0 + nu) / 2.0) * brace

    return (Piece((0.0, math.inf), f, _spec(0.0, math.inf, lam_lo=-1.0 - s / 2.0)),)


def _v_t36(pt):
    if not (pt.x > 0.0 and pt.y > 0.0 and pt.p > 0.0):
        return "requires x > 0, y > 0, p > 0"
    if not pt.mu + pt.nu < 0.0:
        return "requires Re(mu + nu) < 0 for a convergent original"
    return None


_add(IdentityCase(
    id="T36-POS",
    kind="laplace_pair",
    label="e^{p(y+x)/2} D_mu(sqrt(2yp)) D_nu(sqrt(2xp))",
    image=_t36_image,
    original=_t36_original,
    validity=_v_t36,
    default_grid=_grid(_ORDER_SQUARE, _XY_THREE, (0.5, 3.0)),
    tol=1e-8,
))


def _c361_image(pt, p):
    x, y = pt.x, pt.y
    return math.exp(p * (x + y)) * erfc(math.sqrt(y * p)) * erfc(math.sqrt(x * p))


def _c361_original(pt):
    x, y = pt.x, pt.y

    def f(t, d_lo, d_hi):
        xt = x + t
        yt = y + t
        return (math.sqrt(x) * np.sqrt(xt) + math.sqrt(y) * np.sqrt(yt)) / (
            math.pi * (x + y + t) * np.sqrt(xt * yt))

    return (Piece((0.0, math.inf), f, _spec(0.0, math.inf)),)


_add(IdentityCase(
    id="C361-ERFC2",
    kind="laplace_pair",
    label="e^{p(x+y)} erfc(sqrt(yp)) erfc(sqrt(xp)), rational original",
    image=_c361_image,
    original=_c361_original,
    validity=_v_pos_xyp,
    default_grid=_grid([()], _XY_NINE, (0.5, 1.0, 3.0)),
    tol=1e-8,
))


def _c361rep_image(pt, p):
    return erfc(pt.a) * erfc(pt.b)


def _c361rep_original(pt):
    x, y = pt.x, pt.y
    c = math.exp(-(x + y)) / math.pi

    def f(t, d_lo, d_hi):
        tx = t + x
        ty = t + y
        return c * np.exp(-t) * (math.sqrt(y) * np.sqrt(ty) + math.sqrt(x) * np.sqrt(tx)) / (
            (t + x + y) * np.sqrt(ty * tx))

    return (Piece((0.0, math.inf), f, _spec(0.0, math.inf, decay=1.0)),)


_add(IdentityCase(
    id="C361-REP",
    kind="direct_integral",
    label="erfc(a) erfc(b) as one exponential integral",
    image=_c361rep_image,
    original=_c361rep_original,
    validity=_v_pos_xyp,
    default_grid=_ERF_AB,
    tol=1e-9,
))


def _c361single_image(pt, p):
    return erfc(pt.b)


def _c361single_original(pt):
    x = pt.x
    c = math.sqrt(x) * math.exp(-x) / math.pi

    def f(t, d_lo, d_hi):
        return c * np.exp(-t) / (np.sqrt(t) * (t + x))

    return (Piece((0.0, math.inf), f, _spec(0.0, math.inf, lam_lo=-0.5, decay=1.0)),)


def _v_pos_x(pt):
    if not pt.x > 0.0:
        return "requires b > 0"
    return None


_add(IdentityCase(
    id="C361-ERFC-SINGLE",
    kind="direct_integral",
    label="erfc(b) = (b/pi) e^{-b^2} int_0^inf e^{-t}/((t+b^2) sqrt(t)) dt",
    image=_c361single_image,
    original=_c361single_original,
    validity=_v_pos_x,
    default_grid=tuple(ParamPoint(orders=(), x=b * b, y=b * b, p=1.0)
                       for b in (0.25, 0.5, 1.0, 2.0)),
    tol=1e-9,
))


def _c361om_image(pt, p):
    return 1.0 - erf(pt.a) * erf(pt.b)


def _c361om_original(pt):
    x, y = pt.x, pt.y
    c1 = math.sqrt(x) * math.exp(-x) / math.pi
    c2 = math.sqrt(y) * math.exp(-y) / math.pi

    def f1(t, d_lo, d_hi):
        return c1 * np.exp(-t) * (1.0 / (np.sqrt(t) * (t + x))
                                  - math.exp(-y) / ((t + x + y) * np.sqrt(t + y)))

    def f2(t, d_lo, d_hi):
        return c2 * np.exp(-t) / (np.sqrt(t) * (t + y))

    return (
        Piece((0.0, math.inf), f1, _spec(0.0, math.inf, lam_lo=-0.5, decay=1.0)),
        Piece((0.0, x), f2, _spec(0.0, x, lam_lo=-0.5)),
    )


_add(IdentityCase(
    id="C361-ONE-MINUS",
    kind="direct_integral",
    label="1 - erf(a) erf(b), two-term exponential integral form",
    image=_c361om_image,
    original=_c361om_original,
    validity=_v_pos_xyp,
    default_grid=_ERF_AB,
    tol=1e-9,
))


def _ng69_image(pt, p):
    e = erf(pt.a)
    return 1.0 - e * e


def _ng69_original(pt):
    y = pt.y
    c = 4.0 / math.pi * math.exp(-y)

    def f(t, d_lo, d_hi):
        return c * np.exp(-y * t * t) / (t * t + 1.0)

    return (Piece((0.0, 1.0), f, _spec(0.0, 1.0)),)


def _v_pos_y(pt):
    if not pt.y > 0.0:
        return "requires a > 0"
    return None


_add(IdentityCase(
    id="C361-NG69",
    kind="direct_integral",
    label="1 - erf(a)^2 = (4/pi) e^{-a^2} int_0^1 e^{-a^2 s^2}/(1+s^2) ds",
    image=_ng69_image,
    original=_ng69_original,
    validity=_v_pos_y,
    default_grid=tuple(ParamPoint(orders=(), x=a * a, y=a * a, p=1.0)
                       for a in (0.25, 0.5, 1.0, 2.0)),
    tol=1e-10,
))


# ----------------------------------------------------------------------
# The two corrected transforms and their published-but-wrong originals
# ----------------------------------------------------------------------

def _t41_image(pt, p):
    z = pt.a * math.sqrt(p)
    return pcf_d(pt.nu, z) * pcf_d(-pt.nu - 1.0, z)


def _t41_original(pt):
    nu, y = pt.nu, pt.y
    lower = 0.5 * y
    c = math.sqrt(y) / math.sqrt(2.0 * math.pi)

    def f(t, d_lo, d_hi):
        return (c / (np.sqrt(d_lo * (t + lower)) * np.sqrt(t))
                * np.cos((2.0 * nu + 1.0) * np.arcsin(np.sqrt(d_lo / (2.0 * t)))))

    return (Piece((lower, math.inf), f, _spec(lower, math.inf, lam_lo=-0.5)),)


def _v_t41(pt):
    if not (pt.y > 0.0 and pt.p > 0.0):
        return "requires a > 0, p > 0"
    return None


_add(IdentityCase(
    id="T41-CORRECTED",
    kind="laplace_pair",
    label="D_nu(a sqrt(p)) D_{-nu-1}(a sqrt(p)), arcsin kernel on (a^2/2, inf)",
    image=_t41_image,
    original=_t41_original,
    validity=_v_t41,
    default_grid=_grid([(v,) for v in (-0.5, 0.25, 0.7)],
                       [(a * a, a * a) for a in (0.5, 1.0, 2.0)], (0.5, 1.0, 2.0)),
    tol=1e-8,
))


def _neg_t41_original(pt):
    nu, y = pt.nu, pt.y
    a = math.sqrt(y)

    def f(t, d_lo, d_hi):
        return (1.0 / (math.sqrt(2.0) * np.sqrt(d_lo * (t + a)) * np.sqrt(t))
                * np.cos((nu + 0.5) * np.arccos(y / (2.0 * t))))

    return (Piece((a, math.inf), f, _spec(a, math.inf, lam_lo=-0.5)),)


def _v_neg_t41(pt):
    base = _v_t41(pt)
    if base:
        return base
    if pt.a > 2.0:
        return "requires a <= 2 so the printed arccos argument stays in [-1, 1]"
    return None


_add(IdentityCase(
    id="NEG-T41",
    kind="laplace_pair",
    label="published arccos form for D_nu D_{-nu-1}; wrong, kept as a control",
    image=_t41_image,
    original=_neg_t41_original,
    validity=_v_neg_t41,
    default_grid=_grid([(v,) for v in (-0.5, 0.25, 0.7)],
                       [(a * a, a * a) for a in (0.5, 1.0, 2.0)], (0.5, 1.0, 2.0)),
    tol=1e-8,
    negative_control=True,
))


def _t42_original(pt):
    mu, nu, y = pt.mu, pt.nu, pt.y
    s = mu + nu
    c = rg(-s) * y ** (s / 2.0)

    def f(t, d_lo, d_hi):
        F = _masked_2f2(-mu, -nu, -s / 2.0, (1.0 - s) / 2.0, t * t / (4.0 * y))
        return c * t ** (-(1.0 + s)) * np.exp(-t * t / (2.0 * y)) * F

    return (Piece((0.0, math.inf), f,
                  _spec(0.0, math.inf, lam_lo=-(1.0 + s), decay=0.5 / math.sqrt(y))),)


def _t42_image(pt, p):
    z = pt.a * p
    return math.exp(0.5 * pt.y * p * p) * pcf_d(pt.mu, z) * pcf_d(pt.nu, z)


def _neg_t42_image(pt, p):
    z = pt.a * p
    return math.exp(0.25 * pt.y * p * p) * pcf_d(pt.mu, z) * pcf_d(pt.nu, z)


def _v_t42(pt):
    if not (pt.y > 0.0 and pt.p > 0.0):
        return "requires a > 0, p > 0"
    if not pt.mu + pt.nu < 0.0:
        return "requires Re(mu + nu) < 0"
    return None


_T42_GRID = _grid(_ORDER_SQUARE, [(a * a, a * a) for a in (0.5, 1.0, 2.0)], (0.5, 1.0, 2.0))

_add(IdentityCase(
    id="T42-CORRECTED",
    kind="laplace_pair",
    label="e^{a^2 p^2/2} D_mu(ap) D_nu(ap), Gaussian-damped 2F2 original",
    image=_t42_image,
    original=_t42_original,
    validity=_v_t42,
    default_grid=_T42_GRID,
    tol=1e-8,
))

_add(IdentityCase(
    id="NEG-T42",
    kind="laplace_pair",
    label="e^{a^2 p^2/4} variant of the 2F2 transform; wrong, kept as a control",
    image=_neg_t42_image,
    original=_t42_original,
    validity=_v_t42,
    default_grid=_T42_GRID,
    tol=1e-8,
    negative_control=True,
))


# ----------------------------------------------------------------------
# Definite integrals with 2F1 closed forms
# ----------------------------------------------------------------------

def _zc_parts(x, y):
    # argument of the closed-form 2F1 is y(2x+y)/(x+y)^2, complement x^2/(x+y)^2
    return (x / (x + y)) ** 2


def _s51_image(pt, p):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    s = mu + nu
    cm = _zc_parts(x, y)
    f1 = gauss_2f1_cm(-mu / 2.0, -(1.0 + nu) / 2.0, -s / 2.0, cm)
    f2 = gauss_2f1_cm(-mu / 2.0, (1.0 - nu) / 2.0, 1.0 - s / 2.0, cm)
    pref = 2.0 ** (-s) * gamma((1.0 - s) / 2.0) * y * ((x + y) / (x * y)) ** ((1.0 + s) / 2.0)
    return pref * (f1 - nu * y / (s * (x + y)) * f2)


def _s5_integrand(pt, extra_power):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    s = mu + nu
    damp = (x + y) / (4.0 * x * y)

    def f(t, d_lo, d_hi):
        F = _masked_2f2(-mu, -nu, -s / 2.0, (1.0 - s) / 2.0, t * t / (8.0 * x))
        return t ** (-s - extra_power) * np.exp(-damp * t * t) * F

    return f, math.sqrt((2.0 * x + y) / (8.0 * x * y))


def _s51_original(pt):
    f, decay = _s5_integrand(pt, 0.0)
    return (Piece((0.0, math.inf), f,
                  _spec(0.0, math.inf, lam_lo=-(pt.mu + pt.nu), decay=decay)),)


def _v_s51(pt):
    if not (pt.x > 0.0 and pt.y > 0.0):
        return "requires x > 0, y > 0"
    if not pt.mu + pt.nu < 1.0:
        return "requires Re(mu + nu) < 1"
    if pt.mu + pt.nu == 0.0:
        return "requires mu + nu != 0 (coefficient pole)"
    return None


_S5_GRID = _grid(_ORDER_SQUARE, _XY_NINE, (1.0,))

_add(IdentityCase(
    id="S51-INT",
    kind="direct_integral",
    label="int_0^inf t^{-mu-nu} e^{-(x+y)t^2/(4xy)} 2F2(...; t^2/(8x)) dt, closed form",
    image=_s51_image,
    original=_s51_original,
    validity=_v_s51,
    default_grid=_S5_GRID,
    tol=1e-8,
))


def _s52_image(pt, p):
    mu, nu, x, y = pt.mu, pt.nu, pt.x, pt.y
    s = mu + nu
    cm = _zc_parts(x, y)
    F = gauss_2f1_cm(-mu / 2.0, -nu / 2.0, (1.0 - s) / 2.0, cm)
    return 2.0 ** (-(1.0 + s)) * gamma(-s / 2.0) * ((x + y) / (x * y)) ** (s / 2.0) * F


def _s52_original(pt):
    f, decay = _s5_integrand(pt, 1.0)
    return (Piece((0.0, math.inf), f,
                  _spec(0.0, math.inf, lam_lo=-(1.0 + pt.mu + pt.nu), decay=decay)),)


def _v_s52(pt):
    if not (pt.x > 0.0 and pt.y > 0.0):
        return "requires x > 0, y > 0"
    if not pt.mu + pt.nu < 0.0:
        return "requires Re(mu + nu) < 0"
    return None


_add(IdentityCase(
    id="S52-INT",
    kind="direct_integral",
    label="int_0^inf t^{-1-mu-nu} e^{-(x+y)t^2/(4xy)} 2F2(...; t^2/(8x)) dt, closed form",
    image=_s52_image,
    original=_s52_original,
    validity=_v_s52,
    default_grid=_S5_GRID,
    tol=1e-8,
))


# ----------------------------------------------------------------------
# Reductions: closed form against closed form
# ----------------------------------------------------------------------
# Packing: RED-SUM-*/RED-RECURRENCE put z in x (and mirror it in y);
# 2F1 reductions put (a, b) in orders, c in x, z in y; RED-APPELL puts
# (a, b1) in orders, b2 in x, z1 in y, z2 in p; RED-ERFC-REFLECT puts z
# in both x and y.

def _v_none(pt):
    return None


def _red_sum_diff_lhs(pt, p):
    z = pt.x
    return pcf_d(pt.nu, -z) - pcf_d(pt.nu, z)


def _red_sum_diff_rhs(pt, p):
    nu, z = pt.nu, pt.x
    return (z * 2.0 ** ((nu + 3.0) / 2.0) * _RPI * rg(-nu / 2.0)
            * math.exp(-z * z / 4.0) * kummer_phi((1.0 - nu) / 2.0, 1.5, z * z / 2.0))


_RED_SUM_GRID = _grid([(v,) for v in (-1.5, -0.7, 0.5, 1.3)],
                      [(z, z) for z in (0.3, 1.3, 2.5, 5.0)], (1.0,))

_add(IdentityCase(
    id="RED-SUM-DIFF",
    kind="reduction",
    label="D_nu(-z) - D_nu(z) collapses to a 3/2-kind Kummer function",
    image=_red_sum_diff_lhs,
    closed_rhs=_red_sum_diff_rhs,
    validity=_v_none,
    default_grid=_RED_SUM_GRID,
    tol=1e-10,
))


def _red_sum_add_lhs(pt, p):
    z = pt.x
    return pcf_d(pt.nu, -z) + pcf_d(pt.nu, z)


def _red_sum_add_rhs(pt, p):
    nu, z = pt.nu, pt.x
    return (2.0 ** ((nu + 2.0) / 2.0) * _RPI * rg((1.0 - nu) / 2.0)
            * math.exp(-z * z / 4.0) * kummer_phi(-nu / 2.0, 0.5, z * z / 2.0))


_add(IdentityCase(
    id="RED-SUM-ADD",
    kind="reduction",
    label="D_nu(-z) + D_nu(z) collapses to a 1/2-kind Kummer function",
    image=_red_sum_add_lhs,
    closed_rhs=_red_sum_add_rhs,
    validity=_v_none,
    default_grid=_RED_SUM_GRID,
    tol=1e-10,
))


def _red_rec_lhs(pt, p):
    return pt.x * pcf_d(pt.nu, pt.x)


def _red_rec_rhs(pt, p):
    nu, z = pt.nu, pt.x
    return pcf_d(nu + 1.0, z) + nu * pcf_d(nu - 1.0, z)


_add(IdentityCase(
    id="RED-RECURRENCE",
    kind="reduction",
    label="z D_nu(z) = D_{nu+1}(z) + nu D_{nu-1}(z)",
    image=_red_rec_lhs,
    closed_rhs=_red_rec_rhs,
    validity=_v_none,
    default_grid=_grid([(v,) for v in (-1.5, -0.5, 0.5, 1.5)],
                       [(z, z) for z in (0.1, 0.5, 2.0, 10.0)], (1.0,)),
    tol=1e-10,
))


def _f21_grid(points):
    return tuple(ParamPoint(orders=(a, b), x=c, y=z, p=1.0) for (a, b, c, z) in points)


def _red_euler_lhs(pt, p):
    a, b = pt.orders
    return gauss_2f1(a, b, pt.x, pt.y)


def _red_euler_rhs(pt, p):
    a, b = pt.orders
    c, z = pt.x, pt.y
    return (1.0 - z) ** (c - a - b) * gauss_2f1(c - a, c - b, c, z)


_add(IdentityCase(
    id="RED-2F1-EULER",
    kind="reduction",
    label="2F1 Euler transformation (1-z)^{c-a-b} flip",
    image=_red_euler_lhs,
    closed_rhs=_red_euler_rhs,
    validity=_v_none,
    default_grid=_f21_grid([(0.3, 0.7, 1.1, 0.3), (-0.6, 1.2, 2.3, 0.45),
                            (0.25, 0.75, 1.75, -0.35), (1.1, 0.4, 2.6, 0.2)]),
    tol=1e-10,
))


def _red_pfaff_rhs(pt, p):
    a, b = pt.orders
    c, z = pt.x, pt.y
    return (1.0 - z) ** (-a) * gauss_2f1(a, c - b, c, z / (z - 1.0))


_add(IdentityCase(
    id="RED-2F1-PFAFF",
    kind="reduction",
    label="2F1 Pfaff transformation z/(z-1) flip",
    image=_red_euler_lhs,
    closed_rhs=_red_pfaff_rhs,
    validity=_v_none,
    default_grid=_f21_grid([(0.3, 0.7, 1.1, -0.4), (-0.6, 1.2, 2.3, -0.25),
                            (0.55, 0.35, 1.45, -0.4)]),
    tol=1e-10,
))


def _red_connect_rhs(pt, p):
    a, b = pt.orders
    c, z = pt.x, pt.y
    w = 1.0 - z
    return (gamma(c) * gamma(c - a - b) * rg(c - a) * rg(c - b)
            * gauss_2f1(a, b, a + b - c + 1.0, w)
            + gamma(c) * gamma(a + b - c) * rg(a) * rg(b)
            * w ** (c - a - b) * gauss_2f1(c - a, c - b, c - a - b + 1.0, w))


_add(IdentityCase(
    id="RED-2F1-CONNECT",
    kind="reduction",
    label="2F1 connection formula about z=1, two-series form",
    image=_red_euler_lhs,
    closed_rhs=_red_connect_rhs,
    validity=_v_none,
    default_grid=_f21_grid([(0.3, 0.7, 1.6, 0.3), (-0.4, 0.9, 1.85, 0.42),
                            (0.2, 1.3, 2.21, 0.35)]),
    tol=1e-10,
))


def _red_quad_rhs(pt, p):
    a, b = pt.orders
    c, z = pt.x, pt.y
    w = 0.5 * (1.0 - math.sqrt(1.0 - z))
    return gauss_2f1(2.0 * a, 2.0 * b, c, w)


_add(IdentityCase(
    id="RED-2F1-QUAD22",
    kind="reduction",
    label="2F1 quadratic transformation, half-argument form",
    image=_red_euler_lhs,
    closed_rhs=_red_quad_rhs,
    validity=_v_none,
    default_grid=_f21_grid([(0.3, 0.5, 0.3 + 0.5 + 0.5, 0.45),
                            (-0.2, 0.8, -0.2 + 0.8 + 0.5, 0.3),
                            (0.55, 0.15, 0.55 + 0.15 + 0.5, 0.48)]),
    tol=1e-10,
))


def _red_contig_lhs(pt, p):
    a, b = pt.orders
    c, z = pt.x, pt.y
    return ((c - a) * gauss_2f1(a - 1.0, b, c, z)
            + (2.0 * a - c + (b - a) * z) * gauss_2f1(a, b, c, z))


def _red_contig_rhs(pt, p):
    a, b = pt.orders
    c, z = pt.x, pt.y
    return a * (1.0 - z) * gauss_2f1(a + 1.0, b, c, z)


_add(IdentityCase(
    id="RED-2F1-CONTIG",
    kind="reduction",
    label="2F1 three-term contiguous relation in the first parameter",
    image=_red_contig_lhs,
    closed_rhs=_red_contig_rhs,
    validity=_v_none,
    default_grid=_f21_grid([(0.3, 0.7, 1.1, 0.3), (-0.6, 1.2, 2.3, 0.45),
                            (0.25, 0.75, 1.75, -0.35), (1.1, 0.4, 2.6, 0.2)]),
    tol=1e-10,
))


def _red_appell_lhs(pt, p):
    a, b1 = pt.orders
    b2, z1, z2 = pt.x, pt.y, pt.p
    return appell_f1(a, b1, b2, b1 + b2, z1, z2)


def _red_appell_rhs(pt, p):
    a, b1 = pt.orders
    b2, z1, z2 = pt.x, pt.y, pt.p
    return (1.0 - z2) ** (-a) * gauss_2f1(a, b1, b1 + b2, (z1 - z2) / (1.0 - z2))


_add(IdentityCase(
    id="RED-APPELL",
    kind="reduction",
    label="Appell F1 with c=b1+b2 collapses to a single 2F1",
    image=_red_appell_lhs,
    closed_rhs=_red_appell_rhs,
    validity=_v_none,
    default_grid=(
        ParamPoint(orders=(0.4, 0.3), x=0.7, y=0.2, p=-0.5),
        ParamPoint(orders=(0.55, 0.6), x=0.8, y=-0.3, p=0.25),
        ParamPoint(orders=(0.3, 0.5), x=0.9, y=0.4, p=0.1),
    ),
    tol=1e-10,
))


# Targets frozen from an independent high-precision evaluation of the
# gamma-ratio value at z=1; keyed by (a, b, c).
_GAUSS_SUM_TARGETS = {
    (-0.5, 0.5, 1.5): math.pi / 4.0,
    (0.25, 0.25, 1.0): 1.180340599016096226,
    (0.3, 0.4, 2.2): 1.0900606947992392411,
}


def _red_gauss_sum_lhs(pt, p):
    a, b = pt.orders
    return gauss_2f1_at_one(a, b, pt.x)


def _red_gauss_sum_rhs(pt, p):
    a, b = pt.orders
    return _GAUSS_SUM_TARGETS[(a, b, pt.x)]


_add(IdentityCase(
    id="RED-GAUSS-SUM",
    kind="reduction",
    label="2F1 at z=1 against independently frozen gamma-ratio values",
    image=_red_gauss_sum_lhs,
    closed_rhs=_red_gauss_sum_rhs,
    validity=_v_none,
    default_grid=tuple(ParamPoint(orders=(a, b), x=c, y=1.0, p=1.0)
                       for (a, b, c) in sorted(_GAUSS_SUM_TARGETS)),
    tol=1e-10,
))


def _red_erfc_lhs(pt, p):
    z = pt.x
    return erfc(-z) - erfc(z)


def _red_erfc_rhs(pt, p):
    return 2.0 * erf(pt.x)


_add(IdentityCase(
    id="RED-ERFC-REFLECT",
    kind="reduction",
    label="erfc(-z) - erfc(z) = 2 erf(z)",
    image=_red_erfc_lhs,
    closed_rhs=_red_erfc_rhs,
    validity=_v_none,
    default_grid=tuple(ParamPoint(orders=(), x=z, y=z, p=1.0)
                       for z in (0.0, 0.5, 1.5, 3.0, 5.0)),
    tol=1e-10,
))
