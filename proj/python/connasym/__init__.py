"""Exact asymptotic expansions of connectivity probabilities.

Thin wrappers over the C++ core: every structured result crosses the
boundary as a JSON string of exact values and is decoded here.
"""

import json as _json

from . import _core
from ._core import Rat

__all__ = [
    "Rat",
    "__version__",
    "convergence",
    "d_table",
    "exact_probability",
    "expansion",
    "leading_term",
    "models",
    "oracle_histogram",
    "probe",
    "verify",
]

__version__ = _core.version()


def _params(params):
    return _json.dumps(params or {}, sort_keys=True)


def models():
    """Catalog of model ids with their decomposition kind and parameters."""
    return _json.loads(_core.models_json())["models"]


def d_table(model, m=1, k_max=4, params=None):
    """Expansion coefficients d_{k,m} for k = 0..k_max."""
    return _json.loads(_core.d_table_json(model, _params(params), m, k_max))


def expansion(model, m, n, order, params=None, with_exact=True):
    """Evaluated expansion terms and partial sums at structure size n."""
    return _json.loads(
        _core.expansion_json(model, _params(params), m, n, order, with_exact)
    )


def exact_probability(model, m, n, params=None):
    """Exact probability (as a 'p/q' string) of exactly m pieces at size n."""
    return _core.exact_probability_str(model, _params(params), m, n)


def leading_term(model, m, n, params=None):
    """First structurally nonzero term and its closed asymptotic form."""
    return _json.loads(_core.leading_term_json(model, _params(params), m, n))


def oracle_histogram(family, k, cap=None, threads=1):
    """Brute-force component histogram for 'graphs' or 'ties'."""
    cap = -1 if cap is None else cap
    if family == "graphs":
        return _json.loads(_core.oracle_graphs_json(k, cap, threads))
    if family == "ties":
        return _json.loads(_core.oracle_ties_json(k, cap, threads))
    raise ValueError("family must be 'graphs' or 'ties'")


def probe(model, n_max, params=None):
    """Finite-window growth diagnostic (advisory, never a gate)."""
    return _json.loads(_core.probe_json(model, _params(params), n_max))


def convergence(model, m, n_lo, n_hi, order, params=None, bound="10"):
    """Residual-vs-next-term control over a size range."""
    return _json.loads(
        _core.convergence_json(
            model, _params(params), m, n_lo, n_hi, order, str(bound)
        )
    )


def verify(suite="all", kmax=4, order=12, threads=1):
    """Run the self-verification suites; returns checks and a summary."""
    return _json.loads(_core.verify_json(suite, kmax, order, threads))
