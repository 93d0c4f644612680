"""Fresnel integrals in all three conventions, plus the phase kernel."""

import cmath
import math
import random
import struct

import pytest

from faddeyeva.core import Status
from faddeyeva.fresnel import FresnelArgPair, FresnelKind, fresnel, phase_cos_sin
from faddeyeva.oracle import relative_error


def bits(v: float) -> bytes:
    return struct.pack("<d", v)


def test_values_at_origin():
    assert fresnel("S", 0j, 13).value == 0j
    assert fresnel("C", 0j, 13).value == 0j


def test_pinned_reference_rows():
    out = fresnel("S", complex(0.63, 1e-9), 13)
    want = complex(0.1273340391859734, 5.838388163123302e-10)
    assert relative_error(out.value, want) <= 1e-13

    out = fresnel("C", complex(26.0, 0.0), 13)
    assert abs(out.value.real - 0.4999942352727201) <= 1e-10
    assert out.value.imag == 0.0

    out = fresnel("S", complex(26.0, 0.0), 13)
    assert abs(out.value.real - 0.4877573202131747) <= 1e-10

    out = fresnel("C", complex(15.0, 15.0), 13)
    want = complex(5.124909928846552e+304, 5.124909928846552e+304)
    assert relative_error(out.value, want) <= 1e-10


def test_phase_cos_sin_exact_lattice():
    # pi/2 x^2 is a multiple of pi/2 at integer x, and the reduction is
    # carried out exactly, so these hit the table entries dead on
    assert phase_cos_sin(2.0) == (1.0, 0.0)
    assert phase_cos_sin(1.0) == (0.0, 1.0)
    assert phase_cos_sin(26.0) == (1.0, 0.0)


@pytest.mark.parametrize("x,cos_want,sin_want", [
    (12.3, 0.4399391698559398, -0.8980275757606035),
    (1013.75, -0.0980171403295606, 0.9951847266721969),
    (4321.987, 0.8342248472602674, -0.5514244320064025),
])
def test_phase_cos_sin_large_arguments(x, cos_want, sin_want):
    # frozen from a 40-digit evaluation; naive fmod of pi/2 x^2 would be
    # off by ~1 at these magnitudes
    c, s = phase_cos_sin(x)
    assert abs(c - cos_want) <= 1e-14
    assert abs(s - sin_want) <= 1e-14


def test_oddness_is_bitwise():
    for z in (complex(1.3, 0.7), complex(0.0, 0.6), complex(2.2, -0.4)):
        for kind in ("S", "C"):
            a = fresnel(kind, z, 13).value
            b = fresnel(kind, -z, 13).value
            assert bits(b.real) == bits(-a.real)
            assert bits(b.imag) == bits(-a.imag)


def test_conjugation_symmetry():
    rng = random.Random(21)
    for _ in range(50):
        z = complex(rng.uniform(-3, 3), rng.uniform(0.01, 3))
        for kind in ("S", "C"):
            a = fresnel(kind, z.conjugate(), 13).value
            b = fresnel(kind, z, 13).value.conjugate()
            assert relative_error(a, b) <= 1e-13


def test_imaginary_axis_rotation():
    # S(iy) = -i S(y), C(iy) = i C(y)
    for y in (0.3, 1.0, 2.7, 5.5, 10.0):
        s_real = fresnel("S", complex(y, 0.0), 13).value
        s_rot = fresnel("S", complex(0.0, y), 13).value
        assert relative_error(s_rot, -1j * s_real) <= 1e-13
        c_real = fresnel("C", complex(y, 0.0), 13).value
        c_rot = fresnel("C", complex(0.0, y), 13).value
        assert relative_error(c_rot, 1j * c_real) <= 1e-13


def test_convention_conversions_agree():
    # the three argument conventions are substitutions of one integral:
    # S1(z) = S(z sqrt(2/pi)), S2(z) = S(sqrt(2z/pi)), same for C
    scale = math.sqrt(2.0 / math.pi)
    pts = [0.4, 1.7, 2.5, complex(1.2, 0.8), complex(0.3, 2.0)]
    for z in pts:
        zc = complex(z)
        for one, base in (("S1", "S"), ("C1", "C")):
            a = fresnel(one, zc, 13).value
            b = fresnel(base, zc * scale, 13).value
            assert relative_error(a, b) <= 1e-12
        for two, base in (("S2", "S"), ("C2", "C")):
            a = fresnel(two, zc, 13).value
            b = fresnel(base, cmath.sqrt(2.0 * zc / math.pi), 13).value
            assert relative_error(a, b) <= 1e-12


def test_derivatives_on_real_axis():
    # S' = sin(pi x^2 / 2), C' = cos(pi x^2 / 2)
    rng = random.Random(31)
    h = 1e-5
    for _ in range(50):
        x = rng.uniform(0.0, 5.0)
        c_want, s_want = phase_cos_sin(x)
        s_fd = (fresnel("S", complex(x + h, 0), 13).value.real
                - fresnel("S", complex(x - h, 0), 13).value.real) / (2 * h)
        c_fd = (fresnel("C", complex(x + h, 0), 13).value.real
                - fresnel("C", complex(x - h, 0), 13).value.real) / (2 * h)
        assert abs(s_fd - s_want) <= 1e-6
        assert abs(c_fd - c_want) <= 1e-6


def test_real_axis_envelope():
    # |S(x) - 1/2| <= 1/(pi x) once past the first few oscillations
    for x in (10.0, 13.7, 26.0, 100.0):
        s = fresnel("S", complex(x, 0.0), 13).value.real
        assert abs(s - 0.5) <= 1.0 / (math.pi * x)


def test_arg_pair_real_axis_structure():
    for x in (0.25, 1.5, 7.0):
        p = FresnelArgPair.from_z(complex(x, 0.0))
        assert bits(p.u_plus.real) == bits(p.u_minus.real)
        assert bits(p.u_plus.imag) == bits(-p.u_minus.imag)
        want = math.sqrt(math.pi / 2.0) * x
        assert abs(abs(p.u_minus) - want) <= 1e-13 * want


def test_overflow_deep_in_the_plane():
    out = fresnel("C", complex(30.0, 30.0), 13)
    assert out.status is Status.OVERFLOW_INF
    assert not cmath.isfinite(out.value)


def test_kind_coercion_and_rejection():
    z = complex(0.8, 0.2)
    assert fresnel(FresnelKind.C, z, 13).value == fresnel("C", z, 13).value
    with pytest.raises(ValueError):
        fresnel("Q", z, 13)
