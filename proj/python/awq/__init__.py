"""Exact computations with Askey-Wilson algebra modules."""

import json

from . import _core
from ._core import FieldError, PreconditionError


def _s(x):
    return x if isinstance(x, str) else str(x)


def build(n, q, a, b, c):
    return json.loads(_core.build(n, _s(q), _s(a), _s(b), _s(c)))


def verma(lam, q, a, b, c, depth=8):
    return json.loads(_core.verma(_s(lam), _s(q), _s(a), _s(b), _s(c), depth))


def verify(rep):
    return json.loads(_core.verify(json.dumps(rep)))


def irreducible(n, q, a, b, c):
    return json.loads(_core.irreducible(n, _s(q), _s(a), _s(b), _s(c)))


def classify(rep):
    return json.loads(_core.classify(json.dumps(rep)))


def leonard(n, q, a, b, c, direct=False):
    return json.loads(_core.leonard(n, _s(q), _s(a), _s(b), _s(c), direct))


def unitary(n, q, a, b, c, tol=1e-9):
    return json.loads(_core.unitary(n, q, a, b, c, tol))


def racah(m, n, p, q):
    return json.loads(_core.racah(m, n, p, _s(q)))


def criterion(criterion_id, seed=20240607):
    return json.loads(_core.criterion(criterion_id, seed))


__all__ = [
    "FieldError",
    "PreconditionError",
    "build",
    "classify",
    "criterion",
    "irreducible",
    "leonard",
    "racah",
    "unitary",
    "verify",
    "verma",
]
