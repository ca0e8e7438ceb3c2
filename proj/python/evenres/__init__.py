"""Even-restriction transformation families on [n].

Thin re-export of the compiled module: membership tests, exact counts,
named generating sets, and closure enumeration.
"""

from ._evenres import (  # noqa: F401
    Monoid,
    Transformation,
    card,
    closure,
    contains,
    enumerate_family,
    explain,
    generating_set,
    kernel_orbit_count,
    named,
    oracle_contains,
    parse,
    table,
)

__all__ = [
    "Monoid",
    "Transformation",
    "card",
    "closure",
    "contains",
    "enumerate_family",
    "explain",
    "generating_set",
    "kernel_orbit_count",
    "named",
    "oracle_contains",
    "parse",
    "table",
]
