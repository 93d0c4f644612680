"""Reference evaluator: error-free primitives, path agreement, scans."""

import math
import random
from fractions import Fraction

import pytest

from faddeyeva import oracle
from faddeyeva.oracle import (
    BoundaryReport,
    map_applicability,
    relative_error,
    w_ref,
    w_ref_dd,
)


def _random_doubles(rng, n):
    for _ in range(n):
        m = rng.uniform(-1.0, 1.0)
        yield m * 10.0 ** rng.randint(-30, 30)


def test_two_sum_is_error_free():
    rng = random.Random(0xD0D0)
    vals = list(_random_doubles(rng, 200_000))
    for a, b in zip(vals[::2], vals[1::2]):
        s, e = oracle._two_sum(a, b)
        assert Fraction(s) + Fraction(e) == Fraction(a) + Fraction(b)
        if s != 0.0:
            assert abs(e) <= 0.5 * math.ulp(s)
        else:
            assert e == 0.0


def test_two_prod_is_error_free():
    rng = random.Random(0xBEEF)
    vals = list(_random_doubles(rng, 200_000))
    for a, b in zip(vals[::2], vals[1::2]):
        p, e = oracle._two_prod(a, b)
        assert Fraction(p) + Fraction(e) == Fraction(a) * Fraction(b)
        if p != 0.0:
            assert abs(e) <= 0.5 * math.ulp(p)


def test_dd_results_stay_normalized():
    # hi must absorb everything above half an ulp; lo is a pure correction
    rng = random.Random(7)
    for _ in range(20_000):
        a = oracle._two_sum(rng.uniform(-1e5, 1e5), rng.uniform(-1e-5, 1e-5))
        b = oracle._two_sum(rng.uniform(-1e5, 1e5), rng.uniform(-1e-5, 1e-5))
        for r in (oracle.dd_add(a, b), oracle.dd_mul(a, b)):
            if r[0] != 0.0 and math.isfinite(r[0]):
                assert abs(r[1]) <= 0.5 * math.ulp(r[0])


def test_w_ref_at_zero_is_exactly_one():
    (rh, rl), (ih, il) = w_ref_dd(0.0, 0.0)
    assert (rh, rl) == (1.0, 0.0)
    assert (ih, il) == (0.0, 0.0)


@pytest.mark.parametrize("x", [1.0, 5.0, 20.0])
def test_w_ref_real_axis_gaussian(x):
    (rh, rl), _ = w_ref_dd(x, 0.0)
    eh, el = oracle.dd_exp(oracle.dd_neg(oracle._two_prod(x, x)))
    diff = oracle.dd_sub((rh, rl), (eh, el))
    assert abs(diff[0] + diff[1]) <= 1e-28 * eh


def test_w_ref_reproduces_fixture_rows_through_erfc():
    # erfc(z) = exp(-z^2) w(iz); rows from the packaged fixture table
    rows = [
        (6.3e-10, 1e-10, 0.9999999992891211, -1.128379167095513e-10),
        (0.063, 12.0, -1.620124184557807e+61, -1.03965397703758e+60),
    ]
    for x, y, c_re, c_im in rows:
        z = complex(x, y)
        w_at_iz = w_ref(complex(-y, x))
        got = _cexp(-z * z) * w_at_iz
        assert relative_error(got, complex(c_re, c_im)) <= 1e-13


def _cexp(u):
    # cmath.exp overflows for Re u > ~709; rows above keep it finite
    import cmath

    return cmath.exp(u)


def test_series_and_cf_paths_agree_on_crossover_annulus():
    # 1000 points straddling the |z|^2 = 20.25 routing circle; both
    # evaluations must agree to 1e-20 componentwise (floored metric)
    n_r, n_t = 40, 25
    worst = 0.0
    for i in range(n_r):
        r = 4.35 + 0.30 * i / (n_r - 1)
        t_lo = math.asin(1.0 / r)
        for j in range(n_t):
            t = t_lo + (math.pi / 2 - t_lo) * j / (n_t - 1)
            x, y = r * math.cos(t), r * math.sin(t)
            a_re, a_im = oracle._w_maclaurin_dd(x, y)
            b_re, b_im = oracle._w_cf_dd(x, y)
            scale = math.hypot(a_re[0], a_im[0])
            for a, b in ((a_re, b_re), (a_im, b_im)):
                d = oracle.dd_sub(a, b)
                mag = abs(d[0] + d[1])
                ref = abs(a[0] + a[1])
                err = mag / ref if ref >= 1e-6 * scale else mag / scale
                worst = max(worst, err)
    assert worst <= 1e-20, f"worst crossover disagreement {worst:.3e}"


def test_relative_error_floor_semantics():
    # a vanishing reference component is measured against |reference|
    assert relative_error(complex(1.0, 1e-9), complex(1.0, 0.0)) == 1e-9
    # both components comfortably large: plain componentwise relative
    err = relative_error(complex(2.0, 1.0), complex(2.0, 1.0 + 1e-8))
    assert math.isclose(err, 1e-8, rel_tol=1e-6)
    # the floor denominator is |reference| itself, not 1e-6 |reference|
    err = relative_error(complex(1.0, 2e-7), complex(1.0, 1e-7))
    assert math.isclose(err, 1e-7, rel_tol=1e-12)


def test_relative_error_nonfinite_reference():
    inf, nan = math.inf, math.nan
    assert relative_error(complex(inf, 0.0), complex(inf, 0.0)) == 0.0
    assert relative_error(complex(-inf, 0.0), complex(inf, 0.0)) == math.inf
    assert relative_error(complex(1.0, 0.0), complex(inf, 0.0)) == math.inf
    assert relative_error(complex(nan, 0.0), complex(nan, 0.0)) == 0.0
    assert relative_error(complex(0.0, 0.0), complex(nan, 0.0)) == math.inf
    # pair form accepted
    assert relative_error((1.0, 0.0), (1.0, 0.0)) == 0.0


def test_map_thresholds_decrease_with_order():
    lo = map_applicability("series", 1, 1e-4, arcs=12)
    hi = map_applicability("series", 3, 1e-4, arcs=12)
    assert lo.threshold >= hi.threshold
    assert lo.max_err <= 1e-4 and hi.max_err <= 1e-4


def test_boundary_report_row_is_one_tsv_line():
    rep = BoundaryReport("cf", 3, 1e-6, 123.4, 9.9e-7)
    line = rep.row()
    assert "\n" not in line
    assert len(line.split("\t")) == 5


def test_map_rejects_unknown_method():
    with pytest.raises(ValueError):
        map_applicability("pade", 2, 1e-6)
