"""Fresnel integrals S(z) and C(z) for complex arguments, plus the
normalized S1/C1 and S2/C2 argument conventions.

Both integrals reduce to two probability-function evaluations at the
rotated arguments (1 -+ i) sqrt(pi) z / 2.  That form is exact but
cancels badly where one component of the result is much smaller than
the function modulus, so evaluation is routed:

  (a) |z|^2 <= 1: power series in -z^4, no cancellation anywhere;
  (b) |z| > 1 with |Im z| <= 1e-4: the real-axis closed form at Re z
      (one diagonal w evaluation) plus a Taylor step of order 4 in the
      imaginary offset, used only while the order-5 remainder bound
      stays below eps/10;
  (b') |z| > 1 with |Re z| <= 1e-4: the same machinery after rotating
      through S(iz) = -i S(z), C(iz) = i C(z);
  (c) everything else: the two-w form, with the exp(u^2) factors gated
      in log space and infinite products materialized through IEEE
      multiplication as elsewhere in the package.

Arguments fold into the first quadrant first (both integrals are odd
and conjugate-symmetric), which makes oddness bit-exact.

The cos/sin of the quadratic phase pi x^2 / 2 are computed through an
exact split-and-reduce of x^2 modulo 4, so the phase stays meaningful
for x far beyond where a naive pi*x*x/2 argument would have lost it.
"""

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Tuple, Union

from .core import (
    _NAN_OUTCOME,
    AccuracyTarget,
    ComplexPoint,
    EvalOutcome,
    Method,
    RegionKey,
    Status,
    _as_complex,
    _coerce_target,
    _exp_times,
    _two_prod,
    _two_sum,
    faddeyeva,
    select_region,
)

__all__ = ["FresnelArgPair", "FresnelKind", "fresnel", "phase_cos_sin"]

_LN_RMAX = 709.782712893384
_HALF_SQRT_PI = 0.8862269254527580   # sqrt(pi)/2
_HALF_PI = 1.5707963267948966
_PI_LO = 1.2246467991473532e-16      # pi - float(pi)
_HALF_PI_LO = 6.123233995736766e-17  # pi/2 - float(pi/2)
_SQRT_2_OVER_PI = 0.7978845608028654
_TWO_OVER_PI = 0.6366197723675814
_QUARTER = ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))
_NEAR_AXIS = 1e-4


class FresnelKind(enum.Enum):
    """The two integrals and their two alternate argument conventions."""

    S = "S"
    C = "C"
    S1 = "S1"
    C1 = "C1"
    S2 = "S2"
    C2 = "C2"


@dataclass(frozen=True)
class FresnelArgPair:
    """The rotated arguments (1 -+ i) sqrt(pi) z / 2 fed to w."""

    u_minus: complex
    u_plus: complex

    @classmethod
    def from_z(cls, z: Union[ComplexPoint, complex]) -> "FresnelArgPair":
        zc = _as_complex(z)
        hr = _HALF_SQRT_PI * zc.real
        hi = _HALF_SQRT_PI * zc.imag
        return cls(complex(hr + hi, hi - hr), complex(hr - hi, hr + hi))


def phase_cos_sin(x: float) -> Tuple[float, float]:
    """(cos, sin) of pi x^2 / 2 with the phase reduced exactly.

    x*x is split into a rounded product plus its exact low word, both
    reduced modulo 4 (fmod is exact), so integer x lands exactly on the
    quarter-turn table and large x keeps full phase accuracy.
    """
    p, e = _two_prod(x, x)
    if not math.isfinite(p):
        return math.nan, math.nan
    r = math.fmod(p, 4.0)
    n = int(round(r))
    f = (r - n) + math.fmod(e, 4.0)
    if f > 2.0:
        f -= 4.0
    elif f < -2.0:
        f += 4.0
    cn, sn = _QUARTER[n & 3]
    if abs(f) < 2.5e-16:
        return cn, sn
    c = math.cos(_HALF_PI * f)
    s = math.sin(_HALF_PI * f)
    return c * cn - s * sn, s * cn + c * sn


def _sc_series(zc: complex, eps: float) -> Tuple[complex, complex]:
    # alternating series in t = -z^4; coefficient recurrences keep the
    # factorials implicit.  ~10 terms at |z| = 1.
    z2 = zc * zc
    t = -(z2 * z2)
    qpi = 2.4674011002723395  # pi^2/4
    cs = math.pi / 6.0
    bs = 1.0
    p = complex(1.0, 0.0)
    ssum = complex(cs, 0.0)
    csum = complex(1.0, 0.0)
    for k in range(40):
        cs *= qpi * (4 * k + 3) / ((4 * k + 7) * (2 * k + 2) * (2 * k + 3))
        bs *= qpi * (4 * k + 1) / ((4 * k + 5) * (2 * k + 1) * (2 * k + 2))
        p *= t
        ts = cs * p
        tc = bs * p
        ssum += ts
        csum += tc
        if abs(ts) <= 0.1 * eps * abs(ssum) and abs(tc) <= 0.1 * eps * abs(csum):
            break
    return (z2 * zc) * ssum, zc * csum


def _near_real_gate(x: float, ay: float, eps: float) -> bool:
    # order-5 remainder bound sup|F^(5)| |y|^5 / 5! <= eps/10, with
    # sup|F^(5)| <= (pi x)^4 + 6 pi^3 x^2 + 3 pi^2 for either integral
    a2 = math.pi * math.pi * x * x
    b5 = a2 * a2 + 6.0 * math.pi * a2 + 3.0 * math.pi * math.pi
    return b5 * ay ** 5 / 120.0 <= 0.1 * eps


def _sc_near_real(x: float, y: float,
                  target: AccuracyTarget) -> Tuple[complex, complex, EvalOutcome]:
    # closed real-axis form via one diagonal w evaluation, then a Taylor
    # step of order 4 in iy using F' = sin resp. cos of pi z^2 / 2
    c, s = phase_cos_sin(x)
    th = _HALF_SQRT_PI * x
    wq = faddeyeva(complex(th, th), target)
    wr = wq.value.real
    v = -wq.value.imag
    s0 = 0.5 - 0.5 * (wr * (c + s) - v * (c - s))
    c0 = 0.5 - 0.5 * (wr * (c - s) + v * (c + s))
    if y == 0.0:
        return complex(s0, 0.0), complex(c0, 0.0), wq
    a = math.pi * x
    b = math.pi
    a2 = a * a
    d2s = a * c
    d3s = b * c - a2 * s
    d4s = -3.0 * a * b * s - a2 * a * c
    d2c = -a * s
    d3c = -b * s - a2 * c
    d4c = -3.0 * a * b * c + a2 * a * s
    y2 = y * y
    sv = complex(s0 - 0.5 * y2 * d2s + y2 * y2 * d4s / 24.0,
                 y * (s - y2 * d3s / 6.0))
    cv = complex(c0 - 0.5 * y2 * d2c + y2 * y2 * d4c / 24.0,
                 y * (c - y2 * d3c / 6.0))
    return sv, cv, wq


def _sc_via_w(x: float, y: float, target: AccuracyTarget):
    pair = FresnelArgPair.from_z(complex(x, y))
    mirrored = y <= x
    if mirrored:
        # Im(u_-) <= 0 here, so w would reflect internally at the rounded
        # argument and the ~3e-13 phase drift between the rounded square
        # and the exact pi x y - iP would leak into small components.
        # But u_-^2 = A - iP exactly, so the reflected exponential fuses
        # with the prefactor into the constant 2 and only the mirror
        # point (h(x+y), h(x-y)) needs evaluating, where w' is tiny.
        ub = complex(pair.u_plus.imag, pair.u_plus.real)
        wm = faddeyeva(ub, target)
    else:
        wm = faddeyeva(pair.u_minus, target)
    wp = faddeyeva(pair.u_plus, target)
    if wm.status is Status.UNDEFINED_NAN or wp.status is Status.UNDEFINED_NAN:
        nan = complex(math.nan, math.nan)
        return nan, nan, Status.UNDEFINED_NAN, wm.region, wm.method
    # u_-+^2 = +-pi x y -+ i (pi/2)(x^2 - y^2); both the amplitude
    # exponent and the phase are carried with their low words, since a
    # single ulp of a ~700-size exponent or phase would cost 1e-13
    p1, e1 = _two_prod(x, y)
    ahi, e2 = _two_prod(math.pi, p1)
    alo = e2 + math.pi * e1 + _PI_LO * p1
    d, de = _two_sum(x, -y)
    sm_, se = _two_sum(x, y)
    q, qe = _two_prod(d, sm_)
    ql = qe + d * se + sm_ * de
    ph, pe = _two_prod(_HALF_PI, q)
    plo = pe + _HALF_PI * ql + _HALF_PI_LO * q
    cp = math.cos(ph)
    sp = math.sin(ph)
    cph = cp - plo * sp
    sph = sp + plo * cp
    if mirrored:
        # f(u_-) = 1 - e^{A-iP} w(u_-) = -1 + e^{A-iP} conj(w(ub))
        tref, over_m = _exp_times(ahi, alo, cph, -sph, wm.value.conjugate())
        fm = complex(tref.real - 1.0, tref.imag)
    else:
        tm, over_m = _exp_times(ahi, alo, cph, -sph, wm.value)
        fm = 1.0 - tm
    tp, over_p = _exp_times(-ahi, -alo, cph, sph, wp.value)
    fp = 1.0 - tp
    # S = (-1-i)/4 (fm + i fp), C = (-1+i)/4 (fm - i fp); the quarters
    # are applied before combining so in-range results near the overflow
    # ceiling cannot overflow in the additions
    gr = 0.25 * (fm.real - fp.imag)
    gi = 0.25 * (fm.imag + fp.real)
    hr = 0.25 * (fm.real + fp.imag)
    hi = 0.25 * (fm.imag - fp.real)
    sv = complex(gi - gr, -(gr + gi))
    cv = complex(-(hr + hi), hr - hi)
    status = Status.OVERFLOW_INF if (over_m or over_p) else Status.OK
    if status is Status.OK and (math.isinf(sv.real) or math.isinf(sv.imag)
                                or math.isinf(cv.real) or math.isinf(cv.imag)):
        status = Status.OVERFLOW_INF
    return sv, cv, status, wm.region, wm.method


def _eval_sc(x: float, y: float, target: AccuracyTarget):
    # first-quadrant S and C together; folding is the caller's job
    key = RegionKey.from_xy(x, y)
    if key.z_sq <= 1.0:
        sv, cv = _sc_series(complex(x, y), target.eps)
        return sv, cv, Status.OK, select_region(key, target), Method.SERIES
    if y <= _NEAR_AXIS and _near_real_gate(x, y, target.eps):
        sv, cv, wq = _sc_near_real(x, y, target)
        return sv, cv, wq.status, wq.region, Method.REAL_AXIS
    if x <= _NEAR_AXIS and _near_real_gate(y, x, target.eps):
        s2, c2, st, rg, mth = _eval_sc(y, x, target)
        return (complex(-s2.imag, -s2.real), complex(c2.imag, c2.real),
                st, rg, mth)
    return _sc_via_w(x, y, target)


def fresnel(kind: Union[FresnelKind, str], z: Union[ComplexPoint, complex],
            acc: Union[AccuracyTarget, int] = 13) -> EvalOutcome:
    """Evaluate one Fresnel integral convention at z.

    S1/C1 rescale the argument by sqrt(2/pi); S2/C2 first map it through
    the principal square root of 2 z / pi (Re >= 0, ties toward
    Im >= 0).
    """
    if not isinstance(kind, FresnelKind):
        kind = FresnelKind(kind)
    target = _coerce_target(acc)
    zc = _as_complex(z)
    if kind is FresnelKind.S1 or kind is FresnelKind.C1:
        zc = complex(_SQRT_2_OVER_PI * zc.real, _SQRT_2_OVER_PI * zc.imag)
    elif kind is FresnelKind.S2 or kind is FresnelKind.C2:
        zc = cmath.sqrt(complex(_TWO_OVER_PI * zc.real,
                                _TWO_OVER_PI * zc.imag))
    want_s = kind in (FresnelKind.S, FresnelKind.S1, FresnelKind.S2)
    x, yy = zc.real, zc.imag
    if math.isnan(x) or math.isnan(yy):
        return _NAN_OUTCOME
    neg = x < 0.0 or (x == 0.0 and yy < 0.0)
    if neg:
        x, yy = -x, -yy
    conj = yy < 0.0
    if conj:
        yy = -yy
    sv, cv, status, region, method = _eval_sc(x, yy, target)
    value = sv if want_s else cv
    if conj:
        value = value.conjugate()
    if neg:
        value = -value
    return EvalOutcome(value, status, region, method)
