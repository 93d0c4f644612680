"""Fixture table parsing and verification.

The fixture file is tab-separated UTF-8 with '#' comment lines and columns
(function, x, y, re, im, source, min_digits).  Numeric tokens may use any
of the notations that appear in published tables of this family: plain
floats, Fortran D-exponents ("0.100D-08"), exponents whose sign replaced
the marker entirely ("0.4441265477758837-231"), and the literal words
"Infinity", "-Infinity", "NaN".
"""

from __future__ import annotations

import math
import re
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..core import AccuracyTarget, EvalOutcome, Status, faddeyeva
from ..derived import evaluate as derived_evaluate
from ..fresnel import fresnel
from ..oracle import relative_error

__all__ = [
    "FixtureParseError",
    "FixtureReport",
    "FixtureRow",
    "RowResult",
    "format_number",
    "parse_fixture_file",
    "parse_number",
    "resolve_function",
    "verify_fixtures",
]

SOURCES = ("present", "matlab", "mathematica", "maple")

_BARE_EXP = re.compile(r"^([+-]?(?:\d+\.?\d*|\.\d+))([+-]\d{3})$")


class FixtureParseError(ValueError):
    """A fixture line failed to parse; carries 1-based line and column."""

    def __init__(self, path: str, line: int, column: int, message: str):
        self.path = path
        self.line = line
        self.column = column
        super().__init__(f"{path}:{line}:{column}: {message}")


class FixtureRow(NamedTuple):
    function: str
    x: float
    y: float
    re_expected: float
    im_expected: float
    source: str
    min_digits: int


class RowResult(NamedTuple):
    row: FixtureRow
    value: complex
    status: Status
    err: float
    digits: float
    passed: bool


class FixtureReport(NamedTuple):
    path: str
    source: str
    results: Tuple[RowResult, ...]

    @property
    def n_pass(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def n_fail(self) -> int:
        return len(self.results) - self.n_pass

    @property
    def ok(self) -> bool:
        return self.n_fail == 0

    @property
    def worst(self) -> Optional[RowResult]:
        if not self.results:
            return None
        return min(self.results, key=lambda r: r.digits)


def parse_number(token: str) -> float:
    """One numeric token to a float; raises ValueError on junk."""
    if token == "Infinity":
        return math.inf
    if token == "-Infinity":
        return -math.inf
    if token == "NaN":
        return math.nan
    t = token.replace("D", "E").replace("d", "e")
    m = _BARE_EXP.match(t)
    if m is not None:
        t = m.group(1) + "E" + m.group(2)
    return float(t)


def format_number(v: float) -> str:
    """Canonical form: shortest repr for finite, literal words otherwise."""
    if math.isnan(v):
        return "NaN"
    if math.isinf(v):
        return "Infinity" if v > 0 else "-Infinity"
    return repr(v)


def _field_column(parts: Sequence[str], index: int) -> int:
    return sum(len(p) + 1 for p in parts[:index]) + 1


def parse_fixture_file(path: str) -> List[FixtureRow]:
    rows: List[FixtureRow] = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 7:
                raise FixtureParseError(
                    path, lineno, 1,
                    f"expected 7 tab-separated fields, got {len(parts)}")
            vals = []
            for i in (1, 2, 3, 4):
                try:
                    vals.append(parse_number(parts[i]))
                except ValueError:
                    raise FixtureParseError(
                        path, lineno, _field_column(parts, i),
                        f"bad numeric token {parts[i]!r}") from None
            if parts[5] not in SOURCES:
                raise FixtureParseError(
                    path, lineno, _field_column(parts, 5),
                    f"unknown source {parts[5]!r}")
            try:
                digits = int(parts[6])
            except ValueError:
                raise FixtureParseError(
                    path, lineno, _field_column(parts, 6),
                    f"bad min_digits {parts[6]!r}") from None
            rows.append(FixtureRow(parts[0], vals[0], vals[1], vals[2],
                                   vals[3], parts[5], digits))
    return rows


def _fresnel_s(z, acc):
    return fresnel("S", z, acc)


def _fresnel_c(z, acc):
    return fresnel("C", z, acc)


def _derived(kind: str) -> Callable[[complex, Union[AccuracyTarget, int]],
                                    EvalOutcome]:
    def call(z, acc):
        return derived_evaluate(kind, z, acc)

    return call


_FUNCTIONS = {
    "w": faddeyeva,
    "erf": _derived("erf"),
    "erfc": _derived("erfc"),
    "erfi": _derived("erfi"),
    "erfcx": _derived("erfcx"),
    "dawson": _derived("dawson_z"),
    "zeta": _derived("plasma_zeta"),
    "fresnel_s": _fresnel_s,
    "fresnel_c": _fresnel_c,
}


def resolve_function(name: str) -> Callable[
        [complex, Union[AccuracyTarget, int]], EvalOutcome]:
    """Evaluator for a fixture/CLI function name."""
    try:
        return _FUNCTIONS[name]
    except KeyError:
        raise ValueError(
            f"unknown function {name!r}; expected one of "
            f"{', '.join(sorted(_FUNCTIONS))}") from None


def _expected_status(re_expected: float, im_expected: float) -> Status:
    if math.isinf(re_expected) or math.isinf(im_expected):
        return Status.OVERFLOW_INF
    return Status.UNDEFINED_NAN


def _digits(err: float) -> float:
    if err == 0.0:
        return 17.0
    if not math.isfinite(err) or err >= 1.0:
        return 0.0
    return min(17.0, -math.log10(err))


def verify_fixtures(path: str, source: str = "present",
                    acc: Union[AccuracyTarget, int] = 13) -> FixtureReport:
    """Evaluate every fixture row for one source and compare.

    Finite rows pass when the componentwise error against the stored value
    is at most 10^-min_digits.  Rows with an Inf or NaN component pass only
    when the evaluation reports the matching status (overflow_inf for any
    infinite component, undefined_nan otherwise) and the finite/non-finite
    pattern of the components matches exactly.
    """
    if source not in SOURCES:
        raise ValueError(f"unknown source {source!r}")
    results = []
    for row in parse_fixture_file(path):
        if row.source != source:
            continue
        fn = resolve_function(row.function)
        outcome = fn(complex(row.x, row.y), acc)
        err = relative_error(outcome.value,
                             (row.re_expected, row.im_expected))
        finite = math.isfinite(row.re_expected) and math.isfinite(
            row.im_expected)
        if finite:
            passed = err <= 10.0 ** (-row.min_digits)
        else:
            passed = (err == 0.0
                      and outcome.status is _expected_status(
                          row.re_expected, row.im_expected))
        results.append(RowResult(row, outcome.value, outcome.status, err,
                                 _digits(err), passed))
    return FixtureReport(path, source, tuple(results))
