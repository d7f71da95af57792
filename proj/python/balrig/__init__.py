"""Balanced shifting and bipartite rigidity.

Graphs and complexes use the CLI's JSON wire format, passed as dicts:
``{"a_size": n, "b_size": m, "edges": [[i, j], ...]}`` (1-based) and
``{"dim": d, "color_sizes": [...], "facets": [[[color, index], ...], ...]}``.
"""

import json

from . import _core
from ._core import DEFAULT_PRIME, SizeCapExceeded, TrialDisagreement

__all__ = [
    "DEFAULT_PRIME",
    "SizeCapExceeded",
    "TrialDisagreement",
    "analyze",
    "check_shifted",
    "contains_join",
    "generate",
    "heawood_check",
    "laman_check",
    "rows_independent_m",
    "selftest",
    "shift",
    "stress_space",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def _is_complex(obj):
    return "facets" in (json.loads(obj) if isinstance(obj, str) else obj)


def shift(obj, order="default", k=2, l=2, trials=3, prime=DEFAULT_PRIME, seed=1):
    """Balanced shifting of a graph or complex; returns the report dict."""
    if _is_complex(obj):
        return json.loads(_core.shift_complex(_dump(obj), order, trials, prime, seed))
    return json.loads(_core.shift_graph(_dump(obj), order, k, l, trials, prime, seed))


def analyze(graph, k, l, trials=3, prime=DEFAULT_PRIME, seed=1):
    return json.loads(_core.analyze(_dump(graph), k, l, trials, prime, seed))


def stress_space(graph, k, l, trials=3, prime=DEFAULT_PRIME, seed=1):
    """Basis of self-stresses, one weight per edge in sorted edge order."""
    return _core.stress_space(_dump(graph), k, l, trials, prime, seed)


def laman_check(graph, k, l):
    return json.loads(_core.laman_check(_dump(graph), k, l))


def rows_independent_m(cplx, l, trials=3, prime=DEFAULT_PRIME, seed=1):
    return json.loads(_core.rows_independent_m(_dump(cplx), l, trials, prime, seed))


def heawood_check(cplx, trials=3, prime=DEFAULT_PRIME, seed=1):
    return json.loads(_core.heawood_check(_dump(cplx), trials, prime, seed))


def check_shifted(obj):
    if _is_complex(obj):
        return _core.check_shifted_complex(_dump(obj))
    return _core.check_shifted_graph(_dump(obj))


def contains_join(cplx, points):
    return _core.contains_join(_dump(cplx), points)


def generate(family, mode="", seed=1, **params):
    """Named family, e.g. ``generate("cycle", n=2)``; hyphenate with ``_``."""
    params = {key.replace("_", "-"): int(value) for key, value in params.items()}
    return json.loads(_core.generate(family, params, mode, seed))


def selftest(seed=1):
    """List of (id, property, passed, detail) for the acceptance properties."""
    return _core.selftest(seed)
