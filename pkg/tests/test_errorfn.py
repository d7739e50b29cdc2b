"""erf and erfc against an independent Maclaurin oracle."""

import math

from hypothesis import given, settings, strategies as st

from lapcyl.special import erf, erfc


def maclaurin_erf(x, terms=60):
    # 2/sqrt(pi) sum (-1)^n x^(2n+1) / (n! (2n+1)); plenty for |x| <= 3
    acc = 0.0
    for n in range(terms - 1, -1, -1):
        acc += (-1.0) ** n * x ** (2 * n + 1) / (math.factorial(n) * (2 * n + 1))
    return 2.0 / math.sqrt(math.pi) * acc


def test_erfc_at_one():
    # oracle-derived value, 10 digits
    assert abs(erfc(1.0) - 0.1572992071) < 1e-9
    assert abs(erfc(1.0) - (1.0 - maclaurin_erf(1.0))) < 1e-14


def test_against_oracle_sweep():
    # the alternating oracle sum cancels to ~1e-13 by x = 3, so the bound
    # tracks the oracle's own accuracy, not erf's
    for i in range(31):
        x = i * 0.1
        assert abs(erf(x) - maclaurin_erf(x)) < 1e-12


def test_complement():
    for x in (0.0, 0.3, 1.0, 2.5, 5.0, -1.2):
        assert abs(erf(x) + erfc(x) - 1.0) < 1e-15


@settings(max_examples=50, deadline=None, derandomize=True)
@given(st.floats(min_value=-6.0, max_value=6.0))
def test_odd_symmetry(x):
    assert abs(erf(-x) + erf(x)) < 1e-14


def test_limits():
    assert erf(0.0) == 0.0
    assert abs(erf(6.0) - 1.0) < 1e-15
    assert abs(erfc(-6.0) - 2.0) < 1e-15
