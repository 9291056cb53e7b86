"""Iterative roots of complex polynomials.

Thin wrappers over the C++ core: every call returns the same JSON record
the command-line tool prints with --json, parsed into a dict.
"""

import json as _json

from . import _core

ParseError = _core.ParseError
MathError = _core.MathError

__all__ = [
    "iterate",
    "compose",
    "sqrt",
    "classify",
    "curve",
    "solve",
    "linroot",
    "normalize",
    "verify",
    "selftest",
    "ParseError",
    "MathError",
]


def iterate(poly, n, *, exact=True, tol=1e-9):
    return _json.loads(_core.iterate(poly, n, exact, tol))


def compose(f, g, *, exact=True, tol=1e-9):
    return _json.loads(_core.compose(f, g, exact, tol))


def sqrt(quartic, *, exact=True, tol=1e-9):
    return _json.loads(_core.sqrt(quartic, exact, tol))


def classify(quartic, *, exact=True, tol=1e-9):
    return _json.loads(_core.classify(quartic, exact, tol))


def curve(beta, *, exact=True, tol=1e-9):
    return _json.loads(_core.curve(beta, exact, tol))


def solve(poly, *, deg=None, order=None, exact=True, tol=1e-9):
    return _json.loads(_core.solve(poly, deg, order, exact, tol))


def linroot(a, b, *, order=2, exact=True, tol=1e-9):
    return _json.loads(_core.linroot(a, b, order, exact, tol))


def normalize(poly, *, exact=True, tol=1e-9):
    return _json.loads(_core.normalize(poly, exact, tol))


def verify():
    return _json.loads(_core.verify())


def selftest(seed=1):
    return _json.loads(_core.selftest(seed))
