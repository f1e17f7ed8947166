"""Markov-Dyck shifts: zeta functions, periodic points and entropy.

Exact series coefficients are returned as ``fractions.Fraction`` and counts
as ``int``; reports come back as dictionaries.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DyckZetaError,
    Graph,
    count_code_words,
    count_periodic,
    count_words,
    fabc_code_gf,
    fabc_graph,
    fib_xi,
    one_vertex_graph,
    perron_rho,
    periodic_orbit_check,
    reduce_word,
)

__version__ = _core.__version__


def _fractions(coeffs):
    return [Fraction(c) for c in coeffs]


def markov_dyck_zeta(graph, order=32):
    return _fractions(_core.markov_dyck_zeta(graph, order))


def periodic_counts(graph, order=32):
    """[Pi_1, ..., Pi_order] from the zeta function."""
    return [int(x) for x in _core.periodic_counts(graph, order)]


def code_series(graph, order=32):
    return [_fractions(s) for s in _core.code_series(graph, order)]


def char_poly(graph):
    return [int(x) for x in _core.char_poly(graph)]


def entropy(graph, tol=1e-10):
    return json.loads(_core.entropy(graph, tol))


def xv_entropy(graph, vertex, tol=1e-10):
    return json.loads(_core.xv_entropy(graph, vertex, tol))


def entropy_bounds(graph):
    return json.loads(_core.entropy_bounds(graph))


def fabc_entropy_poly(a, b, c):
    return [int(x) for x in _core.fabc_entropy_poly(a, b, c)]


def fabc_entropy(a, b, c):
    return json.loads(_core.fabc_entropy(a, b, c))


def fabc_entropy_branch_root(a, b, c):
    return json.loads(_core.fabc_entropy_branch_root(a, b, c))


def fib_zeta(order=32):
    return _fractions(_core.fib_zeta(order))


def run_command(command, graph="", a=None, b=None, c=None, order=32, max_n=8,
                tol=1e-10):
    """Runs a CLI command; returns (exit_code, parsed JSON document)."""
    code, text = _core.run_command(command, graph, a, b, c, order, max_n, tol)
    return code, json.loads(text)
