"""Command-line harness: point-set generation, evaluation, verification, tables."""

from .cli import build_parser, main, parse_params
from .records import RECORD_COLUMNS, VerificationRecord, summarize, write_records
from .suites import SUITES, Options, run_suite
from .tables import TABLES, build_table

__all__ = [
    "RECORD_COLUMNS",
    "SUITES",
    "TABLES",
    "Options",
    "VerificationRecord",
    "build_parser",
    "build_table",
    "main",
    "parse_params",
    "run_suite",
    "summarize",
    "write_records",
]
