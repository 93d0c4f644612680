"""Error-function family, complex Dawson, and plasma dispersion wrappers."""

import cmath
import math
import random
import struct

import pytest

from faddeyeva.core import Status, faddeyeva
from faddeyeva.dawson import daw_real
from faddeyeva.derived import (
    dawson_c,
    erf_c,
    erfc_c,
    erfcx_c,
    erfi_c,
    evaluate,
    plasma_zeta,
)
from faddeyeva.oracle import relative_error


def bits(v: float) -> bytes:
    return struct.pack("<d", v)


# rows lifted from the shipped reference grid, present-work column
PINNED = [
    (erfc_c, complex(26.0, 0.01),
     complex(4.914036960738715e-296, -2.81609646052619e-296)),
    (erfc_c, complex(6.3e-10, 1e-10),
     complex(0.9999999992891211, -1.128379167095513e-10)),
    (erf_c, complex(6.3e-09, 1e-10),
     complex(7.10878875270173e-09, 1.128379167095513e-10)),
    (erf_c, complex(5.9e-10, 15.0),
     complex(3.463901223474737e+88, 1.96138456386738e+96)),
    (erfi_c, complex(6.3, 1e-10),
     complex(1.566345974039044e+16, 19480632.16579139)),
    (dawson_c, complex(26.0, 0.01),
     complex(0.01924502199435739, -7.412921854824279e-06)),
    (dawson_c, complex(0.63, 1e-09),
     complex(0.4870125516138508, 3.86364184966548e-10)),
    (dawson_c, complex(6.3, 1e-10),
     complex(0.08040529489538835, -1.310671568189315e-12)),
    (dawson_c, complex(23.0, 1e-05),
     complex(0.02175973635712256, -9.47872427827918e-09)),
    (dawson_c, complex(15.0, 15.0),
     complex(-0.5888963480848108, -0.6637663396724557)),
]


@pytest.mark.parametrize("fn,z,want", PINNED,
                         ids=lambda v: getattr(v, "__name__", repr(v)))
def test_pinned_reference_rows(fn, z, want):
    out = fn(z, 13)
    assert out.status is Status.OK
    assert relative_error(out.value, want) <= 1e-13


def test_erfc_special_points():
    out = erfc_c(0j, 13)
    assert out.value == 1.0 + 0j
    # deep lower half plane: the e^{z^2} factor overflows
    out = erfc_c(complex(1.0, 28.0), 13)
    assert out.status is Status.OVERFLOW_INF
    assert out.value.real == math.inf
    assert math.isnan(out.value.imag)


def test_erf_at_origin():
    assert erf_c(0j, 13).value == 0j


def test_erfi_pure_imaginary_saturates():
    out = erfi_c(complex(0.0, 26.6), 13)
    assert out.value == 1j


def test_erfcx_real_axis():
    assert erfcx_c(0j, 13).value == 1.0 + 0j
    # erfcx(x) -> 1/(x sqrt(pi)) with an O(x^-2) correction far out
    x = 1e8
    out = erfcx_c(complex(x, 0.0), 13)
    want = 1.0 / (x * math.sqrt(math.pi))
    assert abs(out.value.real - want) <= 1e-13 * want
    assert out.value.imag == 0.0


def test_erfcx_matches_w_on_rotated_axis():
    # erfcx(-iy) and w(y) are the same function in different clothes
    for y in (0.5, 1.3, 2.0, 4.0):
        a = erfcx_c(complex(0.0, -y), 13).value
        b = faddeyeva(complex(y, 0.0), 13).value
        assert relative_error(a, b) <= 1e-13


def test_erf_plus_erfc_is_one():
    rng = random.Random(7)
    for _ in range(200):
        z = complex(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0))
        e = erf_c(z, 13).value
        c = erfc_c(z, 13).value
        scale = max(1.0, abs(e))
        assert abs(e + c - 1.0) <= 1e-14 * scale


def test_erf_symmetries():
    rng = random.Random(8)
    for _ in range(100):
        z = complex(rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0))
        assert relative_error(erf_c(-z, 13).value, -erf_c(z, 13).value) <= 1e-13
        assert relative_error(
            erf_c(z.conjugate(), 13).value, erf_c(z, 13).value.conjugate()
        ) <= 1e-13


def test_erfi_is_rotated_erf():
    rng = random.Random(9)
    for _ in range(100):
        z = complex(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))
        want = -1j * erf_c(1j * z, 13).value
        assert relative_error(erfi_c(z, 13).value, want) <= 1e-13


def test_erfcx_is_scaled_erfc():
    for x in (0.0, 0.5, 1.0, 2.5, 5.0):
        got = erfcx_c(complex(x, 0.0), 13).value
        want = math.exp(x * x) * erfc_c(complex(x, 0.0), 13).value.real
        assert abs(got.real - want) <= 1e-12 * abs(want)


def test_dawson_c_real_axis_matches_daw_real():
    assert dawson_c(0j, 13).value == 0j
    for x in (0.25, 1.0, 2.0, 6.3, 12.0, 26.0):
        got = dawson_c(complex(x, 0.0), 13).value
        want = daw_real(x)
        assert abs(got.real - want) <= 1e-13 * want
        assert got.imag == 0.0


# correctly rounded sqrt(pi); math.sqrt(math.pi) lands one ulp low
SQRT_PI = 1.7724538509055160


def test_plasma_zeta_at_origin():
    out = plasma_zeta(0j, 13)
    assert out.value.imag == SQRT_PI
    assert out.value.real == 0.0


def test_plasma_zeta_real_axis_tail():
    # Z(x) ~ -1/x (1 + 1/(2x^2) + 3/(4x^4)) for large real x, and the
    # Gaussian contribution has underflowed to nothing by x = 50
    x = 50.0
    out = plasma_zeta(complex(x, 0.0), 13)
    want = -1.0 / x - 1.0 / (2.0 * x ** 3) - 3.0 / (4.0 * x ** 5)
    assert abs(out.value.real - want) <= 1e-8 * abs(want)
    assert abs(out.value.imag) <= 1e-300


def test_plasma_zeta_is_scaled_w_bitwise():
    z = complex(1.0, 1.0)
    v = faddeyeva(z, 13).value
    out = plasma_zeta(z, 13).value
    assert bits(out.real) == bits(-(SQRT_PI * v.imag))
    assert bits(out.imag) == bits(SQRT_PI * v.real)


def test_evaluate_dispatches_all_kinds():
    z = complex(0.8, 0.3)
    for kind, fn in [
        ("erf", erf_c),
        ("erfc", erfc_c),
        ("erfi", erfi_c),
        ("erfcx", erfcx_c),
        ("dawson_z", dawson_c),
        ("plasma_zeta", plasma_zeta),
    ]:
        assert evaluate(kind, z, 13).value == fn(z, 13).value


def test_evaluate_rejects_unknown_kind():
    with pytest.raises(ValueError):
        evaluate("sinc", 1j, 13)
