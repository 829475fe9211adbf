"""Smoothness checks and differential calculi for quadratic algebras.

Every function takes the text of an ``.alg`` file (see :func:`load`) and
returns the report as a dict, with the same fields as the ``--json`` output
of the ``dsmooth`` command.
"""

import json
from pathlib import Path

from . import _core
from ._core import AlgebraSyntaxError, DsmoothError

__all__ = [
    "AlgebraSyntaxError",
    "DsmoothError",
    "calculus",
    "classify3d",
    "diffusion_classify",
    "load",
    "normalize",
    "pbw_check",
    "run_cli",
    "smooth",
    "verify_identities",
]


def load(path):
    """Text of an algebra file."""
    return Path(path).read_text(encoding="utf-8")


def normalize(text):
    """Canonical form of an algebra file; parsing it again gives the same algebra."""
    return _core.normalize(text)


def smooth(text, gkdim=None):
    """Smoothness verdict; gkdim defaults to the number of generators."""
    return json.loads(_core.smooth(text, gkdim))


def classify3d(text):
    return json.loads(_core.classify3d(text))


def calculus(text, max_degree, integrability=0, seed=1, gkdim=None):
    """d o d, connectedness up to max_degree and integral forms of the solver's calculus."""
    return json.loads(_core.calculus(text, max_degree, integrability, seed, gkdim))


def diffusion_classify(text):
    return json.loads(_core.diffusion_classify(text))


def verify_identities(n_max=6, samples=20, seed=1):
    return json.loads(_core.verify_identities(n_max, samples, seed))


def pbw_check(text):
    return json.loads(_core.pbw_check(text))


def run_cli(args):
    """Runs the command-line tool in process; returns (exit code, stdout, stderr)."""
    return _core.run_cli(list(args))
