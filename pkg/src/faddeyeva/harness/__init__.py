"""Verification, benchmarking, and CLI plumbing."""

from .bench import BenchCase, TimingReport, gen_case, run_bench
from .cli import main
from .fixtures import (FixtureParseError, FixtureReport, FixtureRow,
                       RowResult, format_number, parse_fixture_file,
                       parse_number, resolve_function, verify_fixtures)

__all__ = [
    "BenchCase",
    "FixtureParseError",
    "FixtureReport",
    "FixtureRow",
    "RowResult",
    "TimingReport",
    "format_number",
    "gen_case",
    "main",
    "parse_fixture_file",
    "parse_number",
    "resolve_function",
    "run_bench",
    "verify_fixtures",
]
