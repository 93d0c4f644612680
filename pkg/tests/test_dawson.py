"""Real-axis Dawson integral and its Taylor coefficient generator."""

import math
import random
import struct

import pytest
from hypothesis import given, settings, strategies as st

from faddeyeva.dawson import DawsonTaylorCoefficients, daw_real, taylor_coeffs


def bits(v: float) -> bytes:
    return struct.pack("<d", v)


def test_daw_real_pinned_values():
    # published reference grid, real axis
    assert daw_real(0.0) == 0.0
    for x, want in [
        (26.0, 0.01924502485184064),
        (6.3, 0.08040529489538835),
        (0.63, 0.4870125516138508),
    ]:
        assert abs(daw_real(x) - want) <= 1e-13 * want


def test_daw_real_small_argument_slope():
    # Daw(x) = x - 2x^3/3 + ..., so the ratio sits within ~x^2 of 1
    x = 1e-4
    assert abs(daw_real(x) / x - 1.0) <= 1e-6


def test_daw_real_large_argument_tail():
    # Daw(x) ~ 1/(2x) + 1/(4x^3) + ...
    for x in (50.0, 120.0, 1e3, 1e6):
        assert abs(2.0 * x * daw_real(x) - 1.0) <= 1e-3


@settings(max_examples=200, deadline=None, derandomize=True)
@given(st.floats(min_value=1e-300, max_value=1e6, allow_nan=False))
def test_daw_real_is_odd_bitwise(x):
    assert bits(daw_real(-x)) == bits(-daw_real(x))


def test_daw_real_satisfies_its_ode():
    # F' = 1 - 2 x F, checked by central differences
    rng = random.Random(1234)
    h = 1e-5
    for _ in range(100):
        x = rng.uniform(-10.0, 10.0)
        deriv = (daw_real(x + h) - daw_real(x - h)) / (2.0 * h)
        residual = deriv - (1.0 - 2.0 * x * daw_real(x))
        assert abs(residual) <= 1e-8


def test_taylor_coeffs_at_origin():
    c = taylor_coeffs(0.0, 3)
    assert isinstance(c, DawsonTaylorCoefficients)
    assert c.x0 == 0.0
    assert c.d == (0.0, 1.0, 0.0, -2.0 / 3.0)


def test_taylor_coeffs_seed_terms():
    # d0 is the function value, d1 comes straight from the ODE
    c = taylor_coeffs(1.0, 4)
    assert c.d[0] == daw_real(1.0)
    assert c.d[1] == 1.0 - 2.0 * 1.0 * c.d[0]


def test_taylor_coeffs_recursion_is_reproducible():
    # the generator must use the plain float recursion; replay it and
    # demand bit equality so nobody silently reorders the arithmetic
    rng = random.Random(99)
    for _ in range(200):
        x0 = rng.uniform(-8.0, 8.0)
        c = taylor_coeffs(x0, 12)
        d0 = daw_real(x0)
        d1 = 1.0 - 2.0 * x0 * d0
        d = [d0, d1]
        for n in range(1, 12):
            d.append(-2.0 / (n + 1) * (x0 * d[n] + d[n - 1]))
        for mine, theirs in zip(d, c.d):
            assert bits(mine) == bits(theirs)


def test_taylor_coeffs_reproduce_nearby_values():
    h = 1e-3
    for x0 in (-3.2, -0.5, 0.9, 1.25, 4.0):
        c = taylor_coeffs(x0, 8)
        acc = 0.0
        for n in range(8, -1, -1):
            acc = c.d[n] + acc * h
        assert abs(acc - daw_real(x0 + h)) <= 1e-15


def test_taylor_coeffs_rejects_bad_order():
    with pytest.raises(ValueError):
        taylor_coeffs(1.0, 25)
    with pytest.raises(ValueError):
        taylor_coeffs(1.0, -1)
