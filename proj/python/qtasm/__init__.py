"""Exact alternating-sign matrix counts, square-ice partition functions and
identity checks, backed by the C++ core.

Values cross the boundary as exact strings: rationals as "p/q", cyclotomic
values as "c0 + c1*zeta", symbolic results one monomial per line.
"""

import json

from ._core import (
    BudgetExceeded,
    ContractError,
    DomainError,
    alpha,
    catalog,
    count,
    enumerate,
    partition_function,
    pfaffian,
    sigma,
    state_count,
)
from ._core import verify as _verify


def verify(identity="all", seed=42, points=20, extended=False, threads=0):
    """Runs identity checks and returns the reports as a list of dicts."""
    return json.loads(_verify(identity, seed, points, extended, threads))


__all__ = [
    "BudgetExceeded",
    "ContractError",
    "DomainError",
    "alpha",
    "catalog",
    "count",
    "enumerate",
    "partition_function",
    "pfaffian",
    "sigma",
    "state_count",
    "verify",
]
