"""Benchmark dataset generation and single-threaded timing.

Each case pairs 71 logarithmically spaced y values with 40001 x values
(one linear sweep per case, or a seeded uniform draw inside |z|^2 <= 36
for case 4), giving 2,840,071 points.  Timing reports the mean wall-clock
nanoseconds per evaluation over repeated full passes, plus the complex sum
of all outputs so the timed loop cannot be optimized away and reruns can
be compared for bit-identical behavior.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Tuple, Union

from ..core import AccuracyTarget
from .fixtures import resolve_function

__all__ = ["BenchCase", "TimingReport", "DEFAULT_SEED", "gen_case",
           "run_bench"]

DEFAULT_SEED = 20160816

N_Y = 71
N_X = 40001

# case id -> (y_lo, y_hi, x_lo, x_hi); case 4 draws x instead of sweeping
_CASE_PARAMS = {
    1: (1e-5, 1e5, -500.0, 500.0),
    2: (1e-20, 1e4, -200.0, 200.0),
    3: (1e-5, 1e5, -10.0, 10.0),
    4: (1e-20, 6.0, None, None),
}

_RADIUS_SQ = 36.0


def _log_grid(lo: float, hi: float, n: int) -> Tuple[float, ...]:
    la, lb = math.log(lo), math.log(hi)
    grid = [math.exp(la + (lb - la) * (i / (n - 1))) for i in range(n)]
    grid[0], grid[-1] = lo, hi
    return tuple(grid)


def _lin_grid(lo: float, hi: float, n: int) -> Tuple[float, ...]:
    grid = [lo + (hi - lo) * (i / (n - 1)) for i in range(n)]
    grid[0], grid[-1] = lo, hi
    return tuple(grid)


@dataclass(frozen=True)
class BenchCase:
    """One benchmark dataset: a y grid crossed with an x rule.

    x_range sweeps a linear grid of nx points; x_range=None draws nx
    uniform x per y inside |z|^2 <= 36 from a Random seeded with `seed`,
    so the dataset is a pure function of (id, grids, seed).
    """

    id: int
    y_grid: Tuple[float, ...]
    x_range: Union[Tuple[float, float], None]
    nx: int = N_X
    seed: int = DEFAULT_SEED
    x_grid: Union[Tuple[float, ...], None] = field(init=False, default=None)

    def __post_init__(self):
        if self.x_range is not None:
            object.__setattr__(
                self, "x_grid",
                _lin_grid(self.x_range[0], self.x_range[1], self.nx))

    @property
    def total_points(self) -> int:
        return len(self.y_grid) * self.nx

    def points(self) -> Iterator[complex]:
        """All points, y-major; a fresh iterator replays identically."""
        if self.x_grid is not None:
            for y in self.y_grid:
                for x in self.x_grid:
                    yield complex(x, y)
            return
        rng = random.Random(self.seed)
        for y in self.y_grid:
            w = math.sqrt(max(0.0, _RADIUS_SQ - y * y))
            for _ in range(self.nx):
                x = w * (2.0 * rng.random() - 1.0)
                # sqrt rounding can push the corner an ulp outside
                while x * x + y * y > _RADIUS_SQ:
                    x = math.nextafter(x, 0.0)
                yield complex(x, y)


def gen_case(case_id: int, seed: int = DEFAULT_SEED) -> BenchCase:
    """One of the four standard 2,840,071-point datasets."""
    try:
        y_lo, y_hi, x_lo, x_hi = _CASE_PARAMS[case_id]
    except KeyError:
        raise ValueError(f"case id must be 1..4, got {case_id}") from None
    x_range = None if x_lo is None else (x_lo, x_hi)
    return BenchCase(case_id, _log_grid(y_lo, y_hi, N_Y), x_range, N_X, seed)


class TimingReport(NamedTuple):
    function: str
    sdgt: int
    case_id: int
    repeats: int
    ns_per_eval: float
    checksum: complex

    def row(self) -> str:
        return (f"{self.function}\t{self.sdgt}\t{self.case_id}"
                f"\t{self.repeats}\t{self.ns_per_eval:.1f}"
                f"\t{self.checksum.real!r}\t{self.checksum.imag!r}")


def run_bench(function: str, sdgt: int, case: BenchCase,
              repeats: int = 10) -> TimingReport:
    """Time `repeats` full single-threaded passes over the case.

    The checksum accumulates inside the timed loop; identical passes must
    produce identical sums, and a mismatch raises rather than reporting a
    meaningless average.
    """
    if repeats < 10:
        raise ValueError("repeats must be at least 10")
    fn = resolve_function(function)
    target = AccuracyTarget.for_digits(sdgt)
    total_ns = 0
    checksum = None
    for _ in range(repeats):
        acc_re = 0.0
        acc_im = 0.0
        pts = case.points()
        start = time.perf_counter_ns()
        for z in pts:
            value = fn(z, target).value
            acc_re += value.real
            acc_im += value.imag
        total_ns += time.perf_counter_ns() - start
        this_sum = complex(acc_re, acc_im)
        if checksum is None:
            checksum = this_sum
        elif not _same_complex(checksum, this_sum):
            raise RuntimeError(
                f"checksum drift across repeats: {checksum!r} then "
                f"{this_sum!r}")
    ns_per_eval = total_ns / (repeats * case.total_points)
    return TimingReport(function, target.sdgt, case.id, repeats,
                        ns_per_eval, checksum)


def _same_complex(a: complex, b: complex) -> bool:
    def same(u: float, v: float) -> bool:
        if math.isnan(u) and math.isnan(v):
            return True
        return u == v

    return same(a.real, b.real) and same(a.imag, b.imag)
