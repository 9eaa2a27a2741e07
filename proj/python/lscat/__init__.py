"""Homotopy, Morse and Lusternik-Schnirelmann invariants of finite simple graphs."""

import json as _json

from ._core import (
    Graph,
    GraphError,
    ParseError,
    __version__,
    betti_numbers,
    cat,
    census_json,
    cri,
    crit,
    cup_length,
    curvature,
    euler_characteristic,
    f_vector,
    fixture,
    fixture_names,
    homotopic,
    index_profile,
    invariant_report_json,
    is_contractible,
    random_ordering,
    reduce,
    tcat,
)

__all__ = [
    "Graph",
    "GraphError",
    "ParseError",
    "__version__",
    "betti_numbers",
    "cat",
    "census",
    "cri",
    "crit",
    "cup_length",
    "curvature",
    "euler_characteristic",
    "f_vector",
    "fixture",
    "fixture_names",
    "homotopic",
    "index_profile",
    "invariant_report",
    "invariant_report_json",
    "is_contractible",
    "random_ordering",
    "reduce",
    "tcat",
]


def invariant_report(g, source="python"):
    """Full invariant bundle as a dict (see ``invariant_report_json``)."""
    return _json.loads(invariant_report_json(g, source))


def census(order, threads=0):
    """Homotopy census of connected graphs on ``order`` vertices as a dict."""
    return _json.loads(census_json(order, threads))
