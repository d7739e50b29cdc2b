"""Error function and its complement, real arguments.

Thin wrappers over the C library implementations in ``math``; writing our
own polynomial fits would only lose accuracy.  The test suite still pins
them against an independent Maclaurin-series oracle.
"""

from __future__ import annotations

import math


def erf(x: float) -> float:
    return math.erf(float(x))


def erfc(x: float) -> float:
    return math.erfc(float(x))
