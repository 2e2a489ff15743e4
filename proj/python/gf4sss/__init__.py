"""Secret sharing schemes from additive and linear codes over GF(4).

The heavy lifting lives in the C++ extension ``gf4sss._core``; this package
adds a couple of conveniences on top (parsed JSON reports).
"""

import json

from gf4sss._core import (
    BudgetExceeded,
    Code,
    DomainError,
    access_report,
    catalog_names,
    deal,
    detect_cheaters,
    load_code,
    parse_code,
    recover,
    run_cli,
)

__all__ = [
    "BudgetExceeded",
    "Code",
    "DomainError",
    "access_report",
    "access_records",
    "catalog_names",
    "deal",
    "detect_cheaters",
    "load_code",
    "parse_code",
    "recover",
    "run_cli",
]

__version__ = "0.1.0"


def access_records(source, analytic=False, list_recovery=False):
    """Access-structure report as a list of dict records."""
    text = access_report(source, analytic=analytic, list_recovery=list_recovery, format="jsonl")
    return [json.loads(line) for line in text.splitlines()]
