"""Normalized volume through a regular triangulation from a generic lift."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import _lower
from .hull import Support, as_support
from .ratgeom import affine_dim, as_rat, format_rat, lcm_denominator

GenericityFailure = _lower.GenericityFailure


@dataclass(frozen=True)
class Lifting:
    """Integer lift per point index, and the seed that produced it."""
    values: tuple[int, ...]
    seed: int
    requested_seed: int


@dataclass(frozen=True)
class Cell:
    vertex_ids: tuple[int, ...]
    normalized_vol: int | Fraction


@dataclass(frozen=True)
class Triangulation:
    cells: tuple[Cell, ...]
    lifting: Lifting | None
    total: int | Fraction
    degenerate: bool = False

    def to_json(self) -> str:
        seed = self.lifting.seed if self.lifting else 0
        return json.dumps({
            "seed": seed,
            "cells": [list(c.vertex_ids) for c in self.cells],
            "total": format_rat(self.total),
        })


def _lattice_points(s: Support):
    scale = lcm_denominator(s.points)
    return [tuple(int(c * scale) for c in p) for p in s.points], scale


def regular_triangulation(s, seed: int = 0) -> Triangulation:
    """Triangulate ``conv(s)`` by the lower hull of a seeded generic lift.

    Only vertices of ``conv(s)`` end up as cell vertices.  A lower-dimensional
    ``s`` gives an empty, ``degenerate`` triangulation with total 0.
    """
    s = as_support(s)
    if len(s) == 0 or affine_dim(s.points) < s.dim:
        return Triangulation((), None, 0, degenerate=True)
    pts, scale = _lattice_points(s)
    cells, _, lifts, used = _lower.lower_cells(pts, seed)
    denom = scale ** s.dim
    out = tuple(Cell(basis, as_rat(Fraction(v, denom))) for basis, v in cells)
    total = as_rat(Fraction(sum(v for _, v in cells), denom))
    return Triangulation(out, Lifting(tuple(lifts), used, seed), total)


def normalized_volume(s, seed: int = 0):
    """``n! vol_n(conv(s))`` exactly; 0 for lower-dimensional ``s``."""
    s = as_support(s)
    if len(s) == 0 or affine_dim(s.points) < s.dim:
        return 0
    pts, scale = _lattice_points(s)
    cells, _, _, _ = _lower.lower_cells(pts, seed)
    return as_rat(Fraction(sum(v for _, v in cells), scale ** s.dim))


def volume_and_vertices(s, seed: int = 0):
    """Normalized volume plus the vertex indices used by the triangulation.

    The vertex set is ``None`` for lower-dimensional input.
    """
    s = as_support(s)
    if len(s) == 0 or affine_dim(s.points) < s.dim:
        return 0, None
    pts, scale = _lattice_points(s)
    cells, _, _, _ = _lower.lower_cells(pts, seed)
    vids = sorted({i for basis, _ in cells for i in basis})
    return as_rat(Fraction(sum(v for _, v in cells), scale ** s.dim)), vids
