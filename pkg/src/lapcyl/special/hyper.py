"""Confluent hypergeometric Phi(a;b;z) and the generalized 2F2 series.

Both are plain Maclaurin series with term-ratio recurrences and Kahan
compensated accumulation.  The stopping rule is three consecutive terms
below rel_tail_tol relative to the running sum, which guards against
stopping inside the pre-asymptotic dip that confluent series show for
large positive arguments.

Phi is also available in a scaled form (value, log_scale) because the
parabolic cylinder evaluations need Phi at z = x^2/2 with x up to 40,
where the unscaled sum would overflow double precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .._exceptions import NonConvergence, ParameterPole
from .gammafn import is_nonpositive_integer


@dataclass(frozen=True)
class SeriesControl:
    """Knobs shared by every series evaluation in this subpackage.

    max_terms: hard iteration cap before NonConvergence.
    rel_tail_tol: a term is negligible once |term| <= rel_tail_tol * |sum|.
    recurrence_guard: magnitude at which scaled series renormalize.
    """

    max_terms: int = 10000
    rel_tail_tol: float = 1e-16
    recurrence_guard: float = 1e250


DEFAULT_CONTROL = SeriesControl()


def phi_scaled(a, b, z, control: SeriesControl = DEFAULT_CONTROL):
    """Kummer Phi(a;b;z) as (value, log_scale): Phi = value * exp(log_scale)."""
    a = complex(a)
    b = complex(b)
    z = complex(z)
    if is_nonpositive_integer(b):
        raise ParameterPole(f"kummer_phi denominator parameter {b} is a nonpositive integer")
    guard = control.recurrence_guard
    log_guard = math.log(guard)
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    comp = 0.0 + 0.0j
    scale = 0.0
    consec = 0
    for k in range(control.max_terms):
        term *= (a + k) * z / ((b + k) * (k + 1.0))
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if abs(term) <= control.rel_tail_tol * abs(total):
            consec += 1
            if consec >= 3:
                return total, scale
        else:
            consec = 0
        if abs(total) > guard or abs(term) > guard:
            total /= guard
            term /= guard
            comp /= guard
            scale += log_guard
    raise NonConvergence(f"kummer_phi series did not settle within {control.max_terms} terms")


def kummer_phi(a, b, z, control: SeriesControl = DEFAULT_CONTROL) -> complex:
    """Kummer's confluent hypergeometric function Phi(a;b;z) = 1F1(a;b;z)."""
    value, scale = phi_scaled(a, b, z, control)
    if scale == 0.0:
        return value
    try:
        return value * cmath.exp(scale)
    except OverflowError:
        raise OverflowError(
            "kummer_phi magnitude exceeds double precision range; "
            "use phi_scaled for the (value, log_scale) form"
        ) from None


def hyp_2f2(a1, a2, b1, b2, z, control: SeriesControl = DEFAULT_CONTROL):
    """2F2(a1,a2;b1,b2;z) for scalar or ndarray argument (entire in z)."""
    a1 = complex(a1)
    a2 = complex(a2)
    b1 = complex(b1)
    b2 = complex(b2)
    for b in (b1, b2):
        if is_nonpositive_integer(b):
            raise ParameterPole(f"hyp_2f2 denominator parameter {b} is a nonpositive integer")
    zarr = np.asarray(z)
    scalar = zarr.ndim == 0
    zc = np.atleast_1d(zarr).astype(complex)
    total = np.ones_like(zc)
    term = np.ones_like(zc)
    comp = np.zeros_like(zc)
    consec = np.zeros(zc.shape, dtype=np.int64)
    floor = np.full(zc.shape, 1e-300)
    for k in range(control.max_terms):
        term = term * ((a1 + k) * (a2 + k) / ((b1 + k) * (b2 + k) * (k + 1.0))) * zc
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        small = np.abs(term) <= control.rel_tail_tol * np.maximum(np.abs(total), floor)
        consec = np.where(small, consec + 1, 0)
        if np.all(consec >= 3):
            break
        if np.max(np.abs(total)) > control.recurrence_guard:
            raise NonConvergence("hyp_2f2 magnitude guard exceeded")
    else:
        raise NonConvergence(f"hyp_2f2 series did not settle within {control.max_terms} terms")
    if not np.all(np.isfinite(total)):
        raise NonConvergence("hyp_2f2 produced a non-finite value")
    if scalar:
        return complex(total[0])
    return total.reshape(zarr.shape)
