"""Exact Jacobi complexes, universal deformation rings and Maurer-Cartan calculus.

Each subcommand of the ``jacobi-deform`` tool is available as a function
taking a problem document (a dict or a JSON string) and returning the
parsed JSON report.
"""

import json

from ._core import bch_terms, canonical_scalar, run, run_document, subcommands

__all__ = [
    "InputError",
    "bch_terms",
    "canonical_scalar",
    "check",
    "cocycle",
    "jacobi",
    "ks",
    "mc_solve",
    "obstructions",
    "ring",
    "run",
    "run_document",
    "subcommands",
]


class InputError(ValueError):
    """The problem document or the flags were rejected (exit status 2)."""


def _call(command, problem, **flags):
    document = problem if isinstance(problem, str) else json.dumps(problem)
    code, out, err = run_document(command, document, **flags)
    if code == 2:
        raise InputError(err.strip())
    return json.loads(out)


def check(problem, **flags):
    return _call("check", problem, **flags)


def jacobi(problem, order=None, **flags):
    return _call("jacobi", problem, order=order, **flags)


def ring(problem, order=None, **flags):
    return _call("ring", problem, order=order, **flags)


def obstructions(problem, order=None, **flags):
    return _call("obstructions", problem, order=order, **flags)


def ks(problem, order=None, **flags):
    return _call("ks", problem, order=order, **flags)


def mc_solve(problem, order=None, **flags):
    return _call("mc-solve", problem, order=order, **flags)


def cocycle(problem, order=None, **flags):
    return _call("cocycle", problem, order=order, **flags)
