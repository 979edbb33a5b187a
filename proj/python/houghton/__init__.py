"""Eventually translational maps of (N x N) x {1..n}: arithmetic, order and homology reports.

Elements are the same documents the command-line tool reads, as dicts.
"""

import json

from . import _houghton
from ._houghton import HoughtonError

__all__ = [
    "HoughtonError",
    "validate",
    "compose",
    "invert",
    "apply",
    "grade",
    "decompose",
    "translation",
    "random_element",
    "sigma_nk_homology",
    "complex_homology",
    "verify",
    "suite_names",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def validate(doc):
    return json.loads(_houghton.validate(_text(doc)))


def compose(first, second):
    """first applied first, then second"""
    return json.loads(_houghton.compose(_text(first), _text(second)))


def invert(doc):
    return json.loads(_houghton.invert(_text(doc)))


def apply(doc, point):
    x, y, q = point
    return _houghton.apply(_text(doc), x, y, q)


def grade(doc):
    return _houghton.grade(_text(doc))


def decompose(doc):
    return json.loads(_houghton.decompose(_text(doc)))


def translation(exponents):
    return json.loads(_houghton.translation(list(exponents)))


def random_element(kind, n, seed):
    return json.loads(_houghton.random_element(kind, n, seed))


def sigma_nk_homology(n, k):
    return json.loads(_houghton.sigma_nk_homology(n, k))


def complex_homology(doc):
    return json.loads(_houghton.complex_homology(_text(doc)))


def verify(suite, trials=50, seed=1):
    return json.loads(_houghton.verify(suite, trials, seed))


def suite_names():
    return list(_houghton.suite_names())
