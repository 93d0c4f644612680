"""Double-double reference evaluator for w(z) and the real Dawson integral.

Everything here runs on (hi, lo) pairs of Python floats carrying roughly 31
significant digits.  The pair invariant is |lo| <= ulp(hi)/2 and every helper
returns a renormalized pair.  Nothing is fast and nothing is vectorized; the
point of this module is to give the fast paths a trustworthy number to be
measured against, and to give threshold scans an independent referee.

Only the upper half-plane is evaluated directly (y < 0 goes through the
reflection w(z) = 2 exp(-z^2) - w(-z)).  Routing for x >= 0, y > 0:

    y == 0            closed real-axis form exp(-x^2) + (2i/sqrt(pi)) D(x)
    |z|^2 <= 20.25    Maclaurin series in iz
    x >= y, x*y <= 8  Taylor expansion of D(x+iy) in iy about the real axis
    otherwise         Laplace continued fraction, modified Lentz

Adjacent routes overlap and agree to ~1e-24 or better; the crossover tests
pin that down.  The continued fraction stalls only near the real axis, and
every point routed to it has either y >= 0.9 or |z|^2 >= 64, so the iteration
cap is never the accuracy limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "BoundaryReport",
    "daw_ref",
    "daw_ref_dd",
    "map_applicability",
    "relative_error",
    "w_ref",
    "w_ref_dd",
]

_SPLITTER = 134217729.0  # 2**27 + 1, Dekker split (math.fma needs 3.13+)

# Frozen to 32 digits; regenerating them needs nothing deeper than a
# quad-precision pi.
_PI_OVER_2 = (1.5707963267948966, 6.123233995736766e-17)
_LN2 = (0.6931471805599453, 2.3190468138462996e-17)
_RSQRT_PI = (0.5641895835477563, 7.66772980658294e-18)
_TWO_RSQRT_PI = (1.1283791670955126, 1.533545961316588e-17)


# ---------------------------------------------------------------------------
# double-double primitives


def _two_sum(a, b):
    s = a + b
    t = s - a
    return s, (a - (s - t)) + (b - t)


def _quick_two_sum(a, b):
    # requires |a| >= |b| or a == 0
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    p = a * b
    ah = _SPLITTER * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLITTER * b
    bh = bh - (bh - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(a, b):
    s, e = _two_sum(a[0], b[0])
    t, f = _two_sum(a[1], b[1])
    e += t
    s, e = _quick_two_sum(s, e)
    return _quick_two_sum(s, e + f)


def dd_sub(a, b):
    return dd_add(a, (-b[0], -b[1]))


def dd_neg(a):
    return -a[0], -a[1]


def dd_mul(a, b):
    p, e = _two_prod(a[0], b[0])
    e += a[0] * b[1] + a[1] * b[0]
    return _quick_two_sum(p, e)


def dd_mul_d(a, s):
    p, e = _two_prod(a[0], s)
    e += a[1] * s
    return _quick_two_sum(p, e)


def dd_div(a, b):
    q1 = a[0] / b[0]
    r = dd_sub(a, dd_mul_d(b, q1))
    q2 = r[0] / b[0]
    r = dd_sub(r, dd_mul_d(b, q2))
    q3 = r[0] / b[0]
    s, e = _quick_two_sum(q1, q2)
    return dd_add((s, e), (q3, 0.0))


def dd_float(a):
    return a[0] + a[1]


# ---------------------------------------------------------------------------
# transcendental helpers


def dd_exp(a):
    """exp of a double-double, full pair accuracy."""
    if a[0] < -745.0:
        return 0.0, 0.0
    if a[0] > 709.7:
        return math.inf, 0.0
    k = round(a[0] / _LN2[0])
    r = dd_sub(a, dd_mul_d(_LN2, float(k)))
    # |r| <= ln2/2, so the plain Taylor sum settles inside 30 terms
    term = (1.0, 0.0)
    acc = (1.0, 0.0)
    for n in range(1, 40):
        term = dd_div(dd_mul(term, r), (float(n), 0.0))
        acc = dd_add(acc, term)
        if abs(term[0]) < 1e-35:
            break
    return math.ldexp(acc[0], k), math.ldexp(acc[1], k)


def dd_sincos(a):
    """(cos a, sin a) as double-doubles.

    Reduction divides by pi/2 held to 32 digits, so the phase error is about
    |a| * 1e-32 absolute; callers keep |a| below ~1e3.
    """
    k = round(a[0] / _PI_OVER_2[0])
    r = dd_sub(a, dd_mul_d(_PI_OVER_2, float(k)))
    r2 = dd_mul(r, r)
    s = r
    term = r
    for n in range(1, 26):
        term = dd_div(dd_mul(term, r2), (-(2.0 * n) * (2.0 * n + 1.0), 0.0))
        s = dd_add(s, term)
        if abs(term[0]) < 1e-37:
            break
    c = (1.0, 0.0)
    term = (1.0, 0.0)
    for n in range(1, 26):
        term = dd_div(dd_mul(term, r2), (-(2.0 * n - 1.0) * (2.0 * n), 0.0))
        c = dd_add(c, term)
        if abs(term[0]) < 1e-37:
            break
    q = k % 4
    if q == 0:
        return c, s
    if q == 1:
        return dd_neg(s), c
    if q == 2:
        return dd_neg(c), dd_neg(s)
    return s, dd_neg(c)


# ---------------------------------------------------------------------------
# Dawson integral on the real axis


def _daw_maclaurin_dd(x):
    if x == 0.0:
        return 0.0, 0.0
    xx = _two_prod(x, x)
    m2 = (-2.0 * xx[0], -2.0 * xx[1])
    term = (x, 0.0)
    acc = term
    for k in range(0, 200):
        term = dd_div(dd_mul(term, m2), (2.0 * k + 3.0, 0.0))
        acc = dd_add(acc, term)
        if abs(term[0]) < 1e-34 * abs(acc[0]):
            break
    return acc


def _daw_taylor_step_dd(a, d0, h):
    # D(a+h) from D(a); c_{n+1} = -2 (a c_n + c_{n-1}) / (n+1) off D' = 1-2xD
    d1 = dd_sub((1.0, 0.0), dd_mul_d(d0, 2.0 * a))
    acc = dd_add(d0, dd_mul_d(d1, h))
    cm, cn = d0, d1
    hp = (h, 0.0)
    for n in range(1, 90):
        cx = dd_div(dd_mul_d(dd_add(dd_mul_d(cn, a), cm), -2.0), (n + 1.0, 0.0))
        hp = dd_mul_d(hp, h)
        t = dd_mul(cx, hp)
        acc = dd_add(acc, t)
        cm, cn = cn, cx
        if abs(t[0]) < 1e-35 * abs(acc[0]):
            break
    return acc


def _daw_asymptotic_dd(x):
    xx = _two_prod(x, x)
    inv = dd_div((1.0, 0.0), (2.0 * xx[0], 2.0 * xx[1]))
    acc = (1.0, 0.0)
    term = (1.0, 0.0)
    prev = math.inf
    for m in range(1, 400):
        term = dd_mul_d(dd_mul(term, inv), 2.0 * m - 1.0)
        if abs(term[0]) >= prev:
            break  # past the smallest term of the divergent tail
        acc = dd_add(acc, term)
        prev = abs(term[0])
        if prev < 1e-34:
            break
    return dd_div(acc, (2.0 * x, 0.0))


def daw_ref_dd(x):
    """Dawson integral of a real argument as a double-double."""
    ax = abs(x)
    if ax <= 4.0:
        r = _daw_maclaurin_dd(ax)
    elif ax < 8.5:
        # march on the exact quarter grid, then one exact residual step
        steps = int((ax - 4.0) / 0.25)
        d0 = _daw_maclaurin_dd(4.0)
        a = 4.0
        for _ in range(steps):
            d0 = _daw_taylor_step_dd(a, d0, 0.25)
            a += 0.25
        h = ax - a  # exact: same binade neighbourhood
        r = _daw_taylor_step_dd(a, d0, h) if h != 0.0 else d0
    else:
        r = _daw_asymptotic_dd(ax)
    return dd_neg(r) if x < 0.0 else r


def daw_ref(x: float) -> float:
    return dd_float(daw_ref_dd(x))


# ---------------------------------------------------------------------------
# w(z) routes


def _cmul(ar, ai, br, bi):
    return (
        dd_sub(dd_mul(ar, br), dd_mul(ai, bi)),
        dd_add(dd_mul(ar, bi), dd_mul(ai, br)),
    )


def _cinv(ar, ai):
    den = dd_add(dd_mul(ar, ar), dd_mul(ai, ai))
    return dd_div(ar, den), dd_neg(dd_div(ai, den))


def _w_maclaurin_dd(x, y):
    # w = sum (iz)^n / Gamma(n/2 + 1); both coefficient tracks divide by n/2
    zre, zim = (-y, 0.0), (x, 0.0)  # iz
    pre, pim = (1.0, 0.0), (0.0, 0.0)
    ce = (1.0, 0.0)
    co = _TWO_RSQRT_PI
    wre, wim = (1.0, 0.0), (0.0, 0.0)
    quiet = 0
    for n in range(1, 340):
        pre, pim = _cmul(pre, pim, zre, zim)
        if n == 1:
            c = co
        elif n & 1:
            co = dd_div(co, (n / 2.0, 0.0))
            c = co
        else:
            ce = dd_div(ce, (n / 2.0, 0.0))
            c = ce
        tre = dd_mul(pre, c)
        tim = dd_mul(pim, c)
        wre = dd_add(wre, tre)
        wim = dd_add(wim, tim)
        if n >= 8 and abs(tre[0]) + abs(tim[0]) < 1e-36 * (
            abs(wre[0]) + abs(wim[0])
        ):
            quiet += 1
            if quiet >= 2:
                break
        else:
            quiet = 0
    return wre, wim


def _w_dawson_taylor_dd(x, y):
    # w = exp(-z^2) + (2i/sqrt(pi)) D(z) with D(x+iy) as a Taylor sum in iy.
    # The identity is only usable when exp(y^2-x^2) stays small against |w|,
    # hence the x >= y routing guard.
    d0 = daw_ref_dd(x)
    d1 = dd_sub((1.0, 0.0), dd_mul_d(d0, 2.0 * x))
    dre = d0
    dim = dd_mul_d(d1, y)
    cm, cn = d0, d1
    ypow = (y, 0.0)
    quiet = 0
    for n in range(1, 160):
        cx = dd_div(dd_mul_d(dd_add(dd_mul_d(cn, x), cm), -2.0), (n + 1.0, 0.0))
        ypow = dd_mul_d(ypow, y)
        t = dd_mul(cx, ypow)
        q = (n + 1) % 4  # i^(n+1) picks the target sum and the sign
        if q == 0:
            dre = dd_add(dre, t)
        elif q == 1:
            dim = dd_add(dim, t)
        elif q == 2:
            dre = dd_sub(dre, t)
        else:
            dim = dd_sub(dim, t)
        cm, cn = cn, cx
        if abs(t[0]) < 1e-35 * (abs(dre[0]) + abs(dim[0])):
            quiet += 1
            if quiet >= 2:
                break
        else:
            quiet = 0
    xx = _two_prod(x, x)
    ex = dd_exp(dd_sub(_two_prod(y, y), xx))
    c, s = dd_sincos(_two_prod(2.0 * x, y))
    ere = dd_mul(ex, c)
    eim = dd_neg(dd_mul(ex, s))
    wre = dd_add(ere, dd_mul(_TWO_RSQRT_PI, dd_neg(dim)))
    wim = dd_add(eim, dd_mul(_TWO_RSQRT_PI, dre))
    return wre, wim


def _w_cf_dd(x, y, tol=1e-30, cap=600):
    # J = z - (1/2)/(z - 1/(z - (3/2)/(...))), w = (i/sqrt(pi)) / J,
    # evaluated by the modified Lentz recurrence with b_j = z, a_j = -j/2.
    bre, bim = (x, 0.0), (y, 0.0)
    fre, fim = bre, bim
    cre, cim = bre, bim
    dre, dim = (0.0, 0.0), (0.0, 0.0)
    quiet = 0
    for j in range(1, cap + 1):
        aj = -0.5 * j
        dre = dd_add(dd_mul_d(dre, aj), bre)
        dim = dd_add(dd_mul_d(dim, aj), bim)
        if dre[0] == 0.0 and dim[0] == 0.0:
            dre = (1e-300, 0.0)
        dre, dim = _cinv(dre, dim)
        ire, iim = _cinv(cre, cim)
        cre = dd_add(dd_mul_d(ire, aj), bre)
        cim = dd_add(dd_mul_d(iim, aj), bim)
        if cre[0] == 0.0 and cim[0] == 0.0:
            cre = (1e-300, 0.0)
        tre, tim = _cmul(cre, cim, dre, dim)
        fre, fim = _cmul(fre, fim, tre, tim)
        # the hi word of delta rounds to 1.0 long before the fraction has
        # settled; the lo word is where late convergence shows up
        step = math.hypot((tre[0] - 1.0) + tre[1], tim[0] + tim[1])
        if j >= 16 and step < tol:
            quiet += 1
            if quiet >= 2:
                break
        else:
            quiet = 0
    ure, uim = _cinv(fre, fim)
    return dd_mul(_RSQRT_PI, dd_neg(uim)), dd_mul(_RSQRT_PI, ure)


def _w_real_axis_dd(x):
    xx = _two_prod(x, x)
    return dd_exp((-xx[0], -xx[1])), dd_mul(_TWO_RSQRT_PI, daw_ref_dd(x))


def _exp_neg_z_sq_dd(x, y):
    xx = _two_prod(x, x)
    ex = dd_exp(dd_sub(_two_prod(y, y), xx))
    c, s = dd_sincos(_two_prod(2.0 * x, y))
    return dd_mul(ex, c), dd_neg(dd_mul(ex, s))


def w_ref_dd(x, y):
    """w(x+iy) as a pair of double-doubles (re, im)."""
    if math.isnan(x) or math.isnan(y):
        return (math.nan, 0.0), (math.nan, 0.0)
    if x < 0.0:
        rre, rim = w_ref_dd(-x, y)
        return rre, dd_neg(rim)
    if y < 0.0:
        # reflection leaves the upper half-plane to the routes below
        ere, eim = _exp_neg_z_sq_dd(x, y)
        rre, rim = w_ref_dd(-x, -y)
        return (
            dd_sub(dd_mul_d(ere, 2.0), rre),
            dd_sub(dd_mul_d(eim, 2.0), (rim[0], rim[1])),
        )
    if y == 0.0:
        return _w_real_axis_dd(x)
    if x * x + y * y <= 20.25:
        return _w_maclaurin_dd(x, y)
    if x >= y and x * y <= 8.0:
        return _w_dawson_taylor_dd(x, y)
    return _w_cf_dd(x, y)


def w_ref(z) -> complex:
    """w(z) rounded to an ordinary complex.

    Accepts a complex, an (x, y) pair, or any object with .x and .y
    fields.  Full-precision callers use w_ref_dd directly.
    """
    if isinstance(z, tuple):
        x, y = float(z[0]), float(z[1])
    elif hasattr(z, "x"):
        x, y = float(z.x), float(z.y)
    else:
        zc = complex(z)
        x, y = zc.real, zc.imag
    rre, rim = w_ref_dd(x, y)
    return complex(dd_float(rre), dd_float(rim))


# ---------------------------------------------------------------------------
# error metric


def _as_pair(v):
    if isinstance(v, tuple):
        return float(v[0]), float(v[1])
    c = complex(v)
    return c.real, c.imag


def _component_error(v, r, scale):
    if math.isnan(r):
        return 0.0 if math.isnan(v) else math.inf
    if math.isinf(r):
        return 0.0 if v == r else math.inf
    if not math.isfinite(v):
        return math.inf
    d = abs(v - r)
    if d == 0.0:
        return 0.0
    ar = abs(r)
    if scale > 0.0 and ar < 1e-6 * scale:
        return d / scale
    if ar > 0.0:
        return d / ar
    return d if scale == 0.0 else d / scale


def relative_error(value, reference) -> float:
    """Componentwise error of `value` against `reference`, max over Re/Im.

    A component whose reference magnitude is under 1e-6 of |reference| is
    measured against |reference| instead of against itself, so noise in a
    vanishing component is not amplified into a fake failure.  Non-finite
    reference components demand an exact match: same NaN-ness, or the same
    signed infinity.  Inputs may be complex numbers or (re, im) pairs.
    """
    vr, vi = _as_pair(value)
    rr, ri = _as_pair(reference)
    scale = math.hypot(
        rr if math.isfinite(rr) else 0.0,
        ri if math.isfinite(ri) else 0.0,
    )
    return max(_component_error(vr, rr, scale), _component_error(vi, ri, scale))


# ---------------------------------------------------------------------------
# applicability scanning


@dataclass(frozen=True)
class BoundaryReport:
    """Smallest |z|^2 at which an expansion meets an accuracy target."""

    method: str  # "cf" or "series"
    order: int
    eps: float
    threshold: float  # |z|^2, grid-quantized to ~2%
    max_err: float  # worst componentwise error observed at `threshold`

    def row(self) -> str:
        return (
            f"{self.method}\t{self.order}\t{self.eps:.1e}"
            f"\t{self.threshold:.6g}\t{self.max_err:.3e}"
        )


def _arc_errors(cand, z2, arcs):
    # cosine-spaced angles over the closed quadrant arc: the worst errors
    # sit in narrow spikes hugging both axes, and the selection table
    # deploys these expansions all the way down to y = 0, so the scan
    # must pinch its samples into the arc ends rather than spread evenly
    r = math.sqrt(z2)
    worst = 0.0
    for i in range(arcs):
        t = (math.pi / 2.0) * (1.0 - math.cos(math.pi * i / (arcs - 1.0))) / 2.0
        zx, zy = r * math.cos(t), r * math.sin(t)
        err = relative_error(cand(zx, zy), w_ref(complex(zx, zy)))
        if err > worst:
            worst = err
    return worst


def map_applicability(
    method: str, order: int, eps: float, *, arcs: int = 24, ratio: float = 1.02
) -> BoundaryReport:
    """Scan |z|^2 levels for where an expansion first meets `eps`.

    Each level is a first-quadrant arc sampled densely near both axes.
    Levels descend geometrically by `ratio` from a coarse upward bracket,
    so the returned threshold is a ~2% grid estimate.
    """
    from . import core  # deferred: the candidates live with the production code

    if method == "cf":
        def cand(zx, zy):
            return core.laplace_cf(complex(zx, zy), order)
    elif method == "series":
        def cand(zx, zy):
            return core.asymptotic_series(complex(zx, zy), order)
    else:
        raise ValueError(f"unknown method {method!r}")

    z2 = 100.0
    worst = _arc_errors(cand, z2, arcs)
    while worst > eps:
        z2 *= 4.0
        if z2 > 1e17:
            raise RuntimeError(
                f"no passing level below |z|^2 = 1e17 for {method} order {order}"
            )
        worst = _arc_errors(cand, z2, arcs)
    best, best_err = z2, worst
    while True:
        nxt = z2 / ratio
        if nxt < 50.0:
            break
        w2 = _arc_errors(cand, nxt, arcs)
        if w2 > eps:
            break
        z2, best, best_err = nxt, nxt, w2
    return BoundaryReport(method, order, eps, best, best_err)
