"""Gamma, reciprocal gamma and digamma for complex arguments.

gamma uses the Lanczos approximation (g = 607/128, 15 coefficients) in the
right half plane and the Euler reflection formula for Re z < 1/2, which is
good to about 1e-15 relative over the parameter ranges this library uses.
reciprocal_gamma returns exactly 0.0 at the poles; the identity catalog
relies on that to switch off vanishing prefactors instead of special-casing
them.  digamma feeds the logarithmic branches of the Gauss series and is
evaluated by upward recurrence into Re z >= 10 followed by the Bernoulli
asymptotic series.
"""

from __future__ import annotations

import cmath
import math

from .._exceptions import PoleError

_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)

_EULER_GAMMA = 0.57721566490153286061


def is_nonpositive_integer(z) -> bool:
    z = complex(z)
    return z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real)


def _lanczos_sum(z: complex) -> complex:
    # valid for Re z >= 0.5
    acc = _LANCZOS_C[0]
    for k in range(1, 15):
        acc += _LANCZOS_C[k] / (z + (k - 1))
    return acc


def _gamma_right(z: complex) -> complex:
    # Re z >= 0.5
    base = z + _LANCZOS_G - 0.5
    return math.sqrt(2.0 * math.pi) * base ** (z - 0.5) * cmath.exp(-base) * _lanczos_sum(z)


def gamma(z) -> complex:
    """Complex gamma function.  Raises PoleError at 0, -1, -2, ..."""
    z = complex(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"gamma pole at {z}")
    if z.real < 0.5:
        # reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (cmath.sin(math.pi * z) * _gamma_right(1.0 - z))
    return _gamma_right(z)


def reciprocal_gamma(z) -> complex:
    """1/Gamma(z), entire; exactly 0.0 at nonpositive integers."""
    z = complex(z)
    if is_nonpositive_integer(z):
        return 0.0 + 0.0j
    if z.real < 0.5:
        return cmath.sin(math.pi * z) * _gamma_right(1.0 - z) / math.pi
    return 1.0 / _gamma_right(z)


def digamma(z) -> complex:
    """Complex digamma (psi) function.  Raises PoleError at 0, -1, -2, ..."""
    z = complex(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"digamma pole at {z}")
    if z.real < 0.5:
        # psi(z) = psi(1-z) - pi cot(pi z)
        return digamma(1.0 - z) - math.pi / cmath.tan(math.pi * z)
    acc = 0.0 + 0.0j
    while z.real < 10.0:
        acc -= 1.0 / z
        z += 1.0
    u = 1.0 / (z * z)
    # ln z - 1/(2z) - 1/(12 z^2) + 1/(120 z^4) - 1/(252 z^6) + ...
    tail = -u * (1.0 / 12.0 - u * (1.0 / 120.0 - u * (1.0 / 252.0 - u * (
        1.0 / 240.0 - u * (1.0 / 132.0 - u * (691.0 / 32760.0 - u / 12.0))))))
    return acc + cmath.log(z) - 0.5 / z + tail
