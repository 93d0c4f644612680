"""Error-function family, Dawson function, and plasma dispersion function
for complex arguments.

Each function reduces to one evaluation of the complex probability
function w plus an exponential prefactor, so the exponent range is the
only place overflow or underflow can happen.  Prefactors are kept in
split (high/low exponent, unit phase) form and compared against the
platform exponent range in log space before any multiplication; products
that cannot be finite are materialized through ordinary complex
multiplication with signed-infinity factors, which reproduces the
mixed Infinity/NaN component patterns of the reference tables instead
of trapping.

Arguments are folded into the first quadrant first (conjugation, and
complement or oddness for the real-axis flip), so the inner w argument
always lies in the upper half-plane where |w| <= 1 and products of a
huge exponential with a huge w cannot arise.

The region and method recorded on an outcome come from the inner w
evaluation when the formula routes through one; local series and Taylor
routes record the region of the original argument and the tag of the
nearest core evaluator.
"""

import enum
import math
from dataclasses import dataclass
from typing import Tuple, Union

from . import dawson
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
    _exp_neg_zsq_parts,
    _exp_times,
    _two_prod,
    faddeyeva,
    select_region,
)

__all__ = [
    "DerivedKind",
    "DerivedRequest",
    "dawson_c",
    "erf_c",
    "erfc_c",
    "erfcx_c",
    "erfi_c",
    "evaluate",
    "plasma_zeta",
]

_LN_RMAX = 709.782712893384
_TWO_RSQRT_PI = 1.1283791670955126  # 2/sqrt(pi)
_HALF_SQRT_PI = 0.8862269254527580  # sqrt(pi)/2
_SQRT_PI = 1.7724538509055160


class DerivedKind(enum.Enum):
    """The six functions this module evaluates."""

    ERF = "erf"
    ERFC = "erfc"
    ERFI = "erfi"
    ERFCX = "erfcx"
    DAWSON = "dawson_z"
    PLASMA_ZETA = "plasma_zeta"


@dataclass(frozen=True)
class DerivedRequest:
    """One evaluation request: which function, where, how accurately."""

    kind: DerivedKind
    z: complex
    acc: AccuracyTarget

    def evaluate(self) -> EvalOutcome:
        return evaluate(self.kind, self.z, self.acc)


def erfc_c(z: Union[ComplexPoint, complex],
           acc: Union[AccuracyTarget, int] = 13) -> EvalOutcome:
    """Complementary error function, e^{-z^2} w(iz).

    The exponential underflows quietly (status stays ok: the product is
    the honest value, possibly zero); when it overflows the component
    pattern of the infinite product is returned with an overflow status.
    """
    target = _coerce_target(acc)
    zc = _as_complex(z)
    x, y = zc.real, zc.imag
    if math.isnan(x) or math.isnan(y):
        return _NAN_OUTCOME
    if y < 0.0:
        r = erfc_c(complex(x, -y), target)
        return EvalOutcome(r.value.conjugate(), r.status, r.region, r.method)
    if x < 0.0:
        # complement identity negates both components, so conjugate the
        # mirrored first-quadrant value before subtracting
        r = erfc_c(complex(-x, y), target)
        return EvalOutcome(2.0 - r.value.conjugate(), r.status,
                           r.region, r.method)
    inner = faddeyeva(complex(-y, x), target)
    if inner.status is Status.UNDEFINED_NAN or inner.status is Status.OVERFLOW_INF:
        # w of the transformed argument failed; per the platform
        # convention the function reports NaN instead of trapping
        return EvalOutcome(complex(math.nan, math.nan),
                           Status.UNDEFINED_NAN, inner.region, inner.method)
    hi, lo, pc, ps = _exp_neg_zsq_parts(x, y)
    value, over = _exp_times(hi, lo, pc, ps, inner.value)
    status = Status.OVERFLOW_INF if over else Status.OK
    return EvalOutcome(value, status, inner.region, inner.method)


def _erf_series(zc: complex, eps: float) -> complex:
    # Maclaurin sum for |z| <= 1; odd powers only, so sign symmetry is
    # exact by construction
    z2 = zc * zc
    p = zc
    s = zc
    n = 1
    while n < 40:
        p *= -z2 / n
        t = p / (2 * n + 1)
        s += t
        if abs(t) <= 0.1 * eps * abs(s):
            break
        n += 1
    return s * _TWO_RSQRT_PI


def _erf_imag_axis(y: float, eps: float) -> Tuple[complex, Status]:
    # erf(iy) = i e^{y^2} (2/sqrt(pi)) Daw(y); the exponent is square of
    # a double so its low word is exact
    px, pe = _two_prod(y, y)
    d = _TWO_RSQRT_PI * dawson.daw_real(y)
    if px > _LN_RMAX:
        if px + math.log(abs(d)) > _LN_RMAX:
            return complex(0.0, math.copysign(math.inf, d)), Status.OVERFLOW_INF
        half = math.exp(0.5 * px)
        return complex(0.0, (d * half) * (1.0 + pe) * half), Status.OK
    amp = math.exp(px)
    amp += amp * pe
    return complex(0.0, amp * d), Status.OK


def erf_c(z: Union[ComplexPoint, complex],
          acc: Union[AccuracyTarget, int] = 13) -> EvalOutcome:
    """Error function: Maclaurin series for |z| <= 1, the imaginary-axis
    Dawson form for pure-imaginary arguments, 1 - erfc elsewhere.

    Relative accuracy degrades within ~1e-3 of the function's complex
    zeros (nearest at about 1.45 + 1.88i and its reflections), where the
    complement route loses digits to cancellation; absolute accuracy
    stays at the 1e-16 level there.
    """
    target = _coerce_target(acc)
    zc = _as_complex(z)
    x, y = zc.real, zc.imag
    if math.isnan(x) or math.isnan(y):
        return _NAN_OUTCOME
    key = RegionKey.from_xy(x, y)
    if key.z_sq <= 1.0:
        value = _erf_series(zc, target.eps)
        return EvalOutcome(value, Status.OK,
                           select_region(key, target), Method.SERIES)
    if x == 0.0:
        value, status = _erf_imag_axis(y, target.eps)
        return EvalOutcome(value, status,
                           select_region(key, target), Method.REAL_AXIS)
    r = erfc_c(zc, target)
    if r.status is Status.UNDEFINED_NAN:
        return r
    return EvalOutcome(1.0 - r.value, r.status, r.region, r.method)


def erfi_c(z: Union[ComplexPoint, complex],
           acc: Union[AccuracyTarget, int] = 13) -> EvalOutcome:
    """Imaginary error function, -i erf(iz)."""
    zc = _as_complex(z)
    r = erf_c(complex(-zc.imag, zc.real), acc)
    v = r.value
    return EvalOutcome(complex(v.imag, -v.real), r.status, r.region, r.method)


def erfcx_c(z: Union[ComplexPoint, complex],
            acc: Union[AccuracyTarget, int] = 13) -> EvalOutcome:
    """Scaled complementary error function, w(iz) with no prefactor.

    For arguments whose transform lands deep in the lower half-plane the
    probability function itself overflows; the platform convention is a
    quiet NaN pair rather than the infinite reflection value.
    """
    zc = _as_complex(z)
    inner = faddeyeva(complex(-zc.imag, zc.real), acc)
    if inner.status is Status.OVERFLOW_INF:
        return EvalOutcome(complex(math.nan, math.nan),
                           Status.UNDEFINED_NAN, inner.region, inner.method)
    return inner


def _dawson_terms(x: float, y: float, eps: float) -> int:
    # a-priori bound (2 max(x,1) y)^n / n! on the Taylor terms, pushed
    # well below eps so components sitting under the relative-error
    # floor stay covered; factorial decay keeps n modest
    g = 2.0 * (x if x > 1.0 else 1.0) * y
    b = 1.0
    n = 0
    lim = 1e-9 * eps
    while n < 24:
        b *= g / (n + 1.0)
        if b <= lim:
            return n
        n += 1
    return 24


def dawson_c(z: Union[ComplexPoint, complex],
             acc: Union[AccuracyTarget, int] = 13) -> EvalOutcome:
    """Dawson function: Taylor steps off the real axis while they
    converge fast, otherwise (i sqrt(pi)/2)(e^{-z^2} - w(z)).

    The Taylor route exists because the difference form cancels
    catastrophically when w is dominated by its e^{-z^2} part, which is
    exactly the small-y regime.
    """
    target = _coerce_target(acc)
    zc = _as_complex(z)
    x, y = zc.real, zc.imag
    if math.isnan(x) or math.isnan(y):
        return _NAN_OUTCOME
    if x < 0.0:
        r = dawson_c(complex(-x, -y), target)
        return EvalOutcome(-r.value, r.status, r.region, r.method)
    if y < 0.0:
        r = dawson_c(complex(x, -y), target)
        return EvalOutcome(r.value.conjugate(), r.status, r.region, r.method)
    key = RegionKey.from_xy(x, y)
    if y == 0.0:
        return EvalOutcome(complex(dawson.daw_real(x), 0.0), Status.OK,
                           select_region(key, target), Method.REAL_AXIS)
    # The Taylor route exists to dodge the e^{-z^2} - w cancellation, which
    # is only live while e^{-x^2} is comparable to |w| ~ 1/(2x).  Past
    # x = 12 that ratio is under 1e-60, while the Taylor side degrades as
    # ~x^2 eps because d1 = 1 - 2xF(x) itself cancels.  Split at 12.
    if x <= 12.0 and 2.0 * (x if x > 1.0 else 1.0) * y <= 0.7:
        d = dawson.taylor_coeffs(x, _dawson_terms(x, y, target.eps)).d
        s_re = 0.0
        s_im = 0.0
        yp = 1.0
        for n, dn in enumerate(d):
            k = n & 3
            t = dn * yp
            if k == 0:
                s_re += t
            elif k == 1:
                s_im += t
            elif k == 2:
                s_re -= t
            else:
                s_im -= t
            yp *= y
        return EvalOutcome(complex(s_re, s_im), Status.OK,
                           select_region(key, target), Method.DAWSON_TAYLOR)
    inner = faddeyeva(zc, target)
    hi, lo, pc, ps = _exp_neg_zsq_parts(x, y)
    wv = inner.value
    if hi > _LN_RMAX:
        if hi + math.log(_HALF_SQRT_PI) > _LN_RMAX:
            diff = complex(math.copysign(math.inf, pc),
                           math.copysign(math.inf, ps)) - wv
            value = complex(-_HALF_SQRT_PI * diff.imag,
                            _HALF_SQRT_PI * diff.real)
            return EvalOutcome(value, Status.OVERFLOW_INF,
                               inner.region, inner.method)
        # e^{hi} alone overflows but the sqrt(pi)/2 factor pulls the
        # result back under the range ceiling; shift one e down
        scale = math.exp(hi - 1.0) * (1.0 + lo)
        diff = complex(pc * scale, ps * scale) - wv * math.exp(-1.0)
        value = complex(-_HALF_SQRT_PI * diff.imag * math.e,
                        _HALF_SQRT_PI * diff.real * math.e)
        return EvalOutcome(value, Status.OK, inner.region, inner.method)
    amp = math.exp(hi)
    amp += amp * lo
    diff = complex(amp * pc - wv.real, amp * ps - wv.imag)
    value = complex(-_HALF_SQRT_PI * diff.imag, _HALF_SQRT_PI * diff.real)
    return EvalOutcome(value, inner.status, inner.region, inner.method)


def plasma_zeta(z: Union[ComplexPoint, complex],
                acc: Union[AccuracyTarget, int] = 13) -> EvalOutcome:
    """Plasma dispersion function, i sqrt(pi) w(z)."""
    inner = faddeyeva(z, acc)
    v = inner.value
    value = complex(-_SQRT_PI * v.imag, _SQRT_PI * v.real)
    status = inner.status
    if status is Status.OK and (math.isinf(value.real) or math.isinf(value.imag)):
        status = Status.OVERFLOW_INF
    return EvalOutcome(value, status, inner.region, inner.method)


_DISPATCH = {
    DerivedKind.ERF: erf_c,
    DerivedKind.ERFC: erfc_c,
    DerivedKind.ERFI: erfi_c,
    DerivedKind.ERFCX: erfcx_c,
    DerivedKind.DAWSON: dawson_c,
    DerivedKind.PLASMA_ZETA: plasma_zeta,
}


def evaluate(kind: Union[DerivedKind, str], z: Union[ComplexPoint, complex],
             acc: Union[AccuracyTarget, int] = 13) -> EvalOutcome:
    """Evaluate one of the six derived functions by kind."""
    if not isinstance(kind, DerivedKind):
        kind = DerivedKind(kind)
    return _DISPATCH[kind](z, acc)
