"""Exact simultaneous direct sum decomposition of multivariate polynomials.

Polynomials are passed as strings over an explicit list of variable names.
Results are the same JSON documents the command line tool writes, decoded
into plain dicts.
"""

import json

from ._core import InternalError, ParseError, PolydecompError, __version__
from . import _core

__all__ = [
    "InternalError",
    "ParseError",
    "PolydecompError",
    "canonical",
    "center",
    "decompose",
    "generate",
    "verify",
    "__version__",
]


def canonical(poly, vars):
    """Render `poly` in canonical graded-lex form."""
    return _core.canonical(poly, list(vars))


def center(polys, vars):
    """Center algebra document: dimension and an exact basis."""
    return json.loads(_core.center_json(list(polys), list(vars)))


def decompose(polys, vars, seed=42, max_tries=8):
    """Decompose recursively and return the result document."""
    return json.loads(_core.decompose_json(list(polys), list(vars), seed, max_tries))


def verify(polys, vars, result):
    """Check a result document against the inputs. Returns (ok, reason)."""
    if not isinstance(result, str):
        result = json.dumps(result)
    return _core.verify_json(list(polys), list(vars), result)


def generate(seed, n, m=1, blocks=None, max_degree=3):
    """Planted instance: (polynomials over x1..xn, ground truth document)."""
    polys, truth = _core.generate_json(seed, n, m, list(blocks or [n]), max_degree)
    return polys, json.loads(truth)
