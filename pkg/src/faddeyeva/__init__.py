"""Multi-accuracy evaluation of w(z) and its relatives.

The core entry point is faddeyeva(z, digits); erf-family and Fresnel
wrappers live in derived and fresnel, the high-precision reference in
oracle, and file/CLI plumbing in harness.
"""

from .core import (AccuracyTarget, ComplexPoint, EvalOutcome, Method,
                   RegionId, RegionKey, RegionMajor, RegionRow, Status,
                   faddeyeva, region_rows, select_region)
from .dawson import daw_real
from .derived import DerivedKind, evaluate, plasma_zeta
from .fresnel import FresnelKind, fresnel
from .harness import (gen_case, main, parse_fixture_file, run_bench,
                      verify_fixtures)
from .oracle import map_applicability, relative_error, w_ref, w_ref_dd

__version__ = "0.1.0"

__all__ = [
    "AccuracyTarget",
    "ComplexPoint",
    "DerivedKind",
    "EvalOutcome",
    "FresnelKind",
    "Method",
    "RegionId",
    "RegionKey",
    "RegionMajor",
    "RegionRow",
    "Status",
    "__version__",
    "daw_real",
    "evaluate",
    "faddeyeva",
    "fresnel",
    "gen_case",
    "main",
    "map_applicability",
    "parse_fixture_file",
    "plasma_zeta",
    "region_rows",
    "relative_error",
    "run_bench",
    "select_region",
    "verify_fixtures",
    "w_ref",
    "w_ref_dd",
]
