"""Exact centralizers and twisted centralizers in Clifford algebras Cl(p,q,r).

Signatures may be given as a ``(p, q, r)`` tuple or a ``"p,q,r"`` string.
Blade sets come back as sorted lists of generator-index lists.
"""

import json

from . import _cliffcent
from ._cliffcent import ClosedFormMismatch, OverlapError, SpecParseError

__all__ = [
    "Multivector",
    "blade_product",
    "center",
    "centralizer",
    "closed_form",
    "commute_class",
    "nullspace_dimension",
    "sweep",
    "table1",
    "verify",
    "ClosedFormMismatch",
    "OverlapError",
    "SpecParseError",
]


def _sig(signature):
    if isinstance(signature, str):
        return _cliffcent.parse_signature(signature)
    p, q, r = signature
    return (int(p), int(q), int(r))


def centralizer(signature, subspace, kind="plain"):
    return _cliffcent.centralizer(_sig(signature), subspace, kind)


def closed_form(signature, grade, kind="plain"):
    return _cliffcent.closed_form(_sig(signature), grade, kind)


def center(signature):
    return _cliffcent.center(_sig(signature))


def nullspace_dimension(signature, subspace, kind="plain"):
    return _cliffcent.nullspace_dimension(_sig(signature), subspace, kind)


def verify(signature, subspace, kind="plain"):
    """Full cross-check of one case; returns the report as a dict."""
    return json.loads(_cliffcent.verify_json(_sig(signature), subspace, kind))


def sweep(max_dim, targets="all", kinds=()):
    """Returns (cases, mismatches)."""
    return _cliffcent.sweep(max_dim, targets, list(kinds))


def table1(signature):
    return json.loads(_cliffcent.table1_json(_sig(signature)))


def blade_product(signature, a, b):
    return _cliffcent.blade_product(_sig(signature), a, b)


def commute_class(signature, a, b):
    return _cliffcent.commute_class(_sig(signature), a, b)


def Multivector(signature, text="0"):
    return _cliffcent.Multivector(_sig(signature), text)
