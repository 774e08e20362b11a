"""Exact quantum holonomies, signed areas and the quantum Goldman bracket on the torus.

Rationals are ``fractions.Fraction``; paths are sequences of ``(x, y)`` pairs.
Algebra elements are dicts mapping a canonical loop class ``(m, n)`` to a
Laurent polynomial ``{exponent: coefficient}`` in ``q``.
"""

import json
from fractions import Fraction

from ._core import (
    commutator_latex,
    concat,
    holonomy,
    inverse,
    signed_area_between,
    signed_area_loop,
    verify,
)
from . import _core

__all__ = [
    "bracket_report",
    "commutator",
    "commutator_latex",
    "concat",
    "goldman",
    "holonomy",
    "intersections",
    "inverse",
    "poisson",
    "relations",
    "signed_area_between",
    "signed_area_loop",
    "verify",
]


def _rational(pair):
    return Fraction(pair[0], pair[1])


def _element(data):
    return {
        tuple(term["class"]): {_rational(c["qexp"]): _rational(c["c"]) for c in term["coeff"]}
        for term in data
    }


def intersections(p1, p2, mode="geometric"):
    """Intersection points of two straight loops given as (m, n) pairs."""
    data = json.loads(_core.intersections_json(*p1, *p2, mode))
    points = [
        {"pos": tuple(_rational(x) for x in pt["pos"]), "lift": _rational(pt["lift"]), "index": pt["index"]}
        for pt in data["points"]
    ]
    return points, data["total"]


def commutator(p1, p2):
    return _element(json.loads(_core.commutator_json(*p1, *p2)))


def goldman(p1, p2):
    return _element(json.loads(_core.goldman_json(*p1, *p2)))


def poisson(p1, p2):
    return _element(json.loads(_core.poisson_json(*p1, *p2)))


def bracket_report(p1, p2):
    """Full comparison of the two bracket forms, as parsed JSON."""
    return json.loads(_core.bracket_report_json(*p1, *p2))


def relations():
    return json.loads(_core.relations_json())
