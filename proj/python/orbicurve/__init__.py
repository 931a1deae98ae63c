"""Invariants of curve orbifold groups G_{g,(r,m)}."""

import json

from ._orbicurve import (
    OrbicurveError,
    euler_characteristic,
    finite_order,
    group_order_of_text,
    kind,
    run_cli,
)
from . import _orbicurve as _core

__all__ = [
    "OrbicurveError",
    "abelianization",
    "cover",
    "euler_characteristic",
    "example",
    "finite_order",
    "group_order_of_text",
    "isomorphic",
    "kind",
    "run_cli",
    "serre",
    "triangle_rep",
    "wallpaper",
]


def abelianization(g, r, m):
    return json.loads(_core.abelianization_json(g, r, list(m)))


def isomorphic(a, b):
    return json.loads(_core.isomorphism_json(a[0], a[1], list(a[2]), b[0], b[1], list(b[2])))


def serre(g, r, m):
    return json.loads(_core.serre_json(g, r, list(m)))


def cover(g, r, m, d):
    return json.loads(_core.cover_json(g, r, list(m), d))


def wallpaper(k, samples=100, seed=0):
    return json.loads(_core.wallpaper_json(k, samples, seed))


def example(name):
    return json.loads(_core.example_json(name))


def triangle_rep(m1, m2, m3, tol=1e-9):
    return json.loads(_core.triangle_json(m1, m2, m3, tol))
