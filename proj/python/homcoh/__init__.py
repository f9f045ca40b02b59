"""Exact cohomology and deformations of Hom-associative and Hom-Lie algebras.

Every entry point takes a path to a JSON file or an already decoded dict and
returns decoded JSON, the same documents the homcoh CLI prints with --json.
"""

import json
import os

from . import _homcoh
from ._homcoh import HomcohError, ParseError

__all__ = [
    "HomcohError",
    "ParseError",
    "validate",
    "cohomology",
    "morphism_cohomology",
    "deform_check",
    "deform_extend",
    "selftest",
]


def _source(obj, base_dir=None):
    if isinstance(obj, dict):
        return json.dumps(obj), base_dir or "."
    path = os.fspath(obj)
    with open(path, encoding="utf-8") as fh:
        return fh.read(), base_dir or os.path.dirname(os.path.abspath(path))


def _degrees(degree):
    if isinstance(degree, int):
        return degree, degree
    lo, hi = degree
    return lo, hi


def validate(obj, base_dir=None):
    return json.loads(_homcoh.validate(*_source(obj, base_dir)))


def cohomology(obj, degree=2, force=False):
    """degree is an int or an inclusive (lo, hi) pair."""
    lo, hi = _degrees(degree)
    return json.loads(_homcoh.cohomology(*_source(obj), lo, hi, force))


def morphism_cohomology(obj, degree, base_dir=None):
    return json.loads(_homcoh.morphism_cohomology(*_source(obj, base_dir), degree))


def deform_check(obj, up_to=None, base_dir=None):
    return json.loads(_homcoh.deform_check(*_source(obj, base_dir), up_to))


def deform_extend(obj, to_order=None, base_dir=None):
    return json.loads(_homcoh.deform_extend(*_source(obj, base_dir), to_order))


def selftest(seed=None):
    return json.loads(_homcoh.selftest() if seed is None else _homcoh.selftest(seed))
