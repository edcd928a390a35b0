"""Exact convex hulls, facet descriptions and face enumeration.

Hulls are read off a lifted lower-hull walk (see :mod:`bkkunmix._lower`):
the cells only ever use vertices of ``conv(points)``, and every boundary ridge
of the triangulation spans a facet.  Lower-dimensional point sets are first
projected onto a set of coordinates that is injective on their affine hull.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import _lower
from .ratgeom import (DimensionMismatch, EmptyInput, RatPoint, affine_dim,
                      as_point, as_rat, dot, independent_columns,
                      lcm_denominator)

DEFAULT_FACE_CAP = 10 ** 6


class InvalidNormal(ValueError):
    """A direction vector was zero or of the wrong length."""


class DegeneratePolytope(ValueError):
    """The polytope is not full-dimensional in its ambient space."""


class ResourceLimit(RuntimeError):
    """A configured size cap was exceeded."""


def face_cap() -> int:
    """Face-count cap, overridable through ``UNMIX_FACE_CAP``."""
    env = os.environ.get("UNMIX_FACE_CAP")
    return int(env) if env else DEFAULT_FACE_CAP


@dataclass(frozen=True)
class Support:
    """A finite point set in ``Q^dim``, deduplicated and lexicographically sorted.

    ``duplicates`` records how many repeated input points were dropped.
    """
    dim: int
    points: tuple[RatPoint, ...]
    duplicates: int = 0

    @classmethod
    def from_points(cls, points: Iterable[Sequence], dim: int | None = None):
        pts = [as_point(p) for p in points]
        if dim is None:
            if not pts:
                raise EmptyInput("cannot infer the dimension of an empty support")
            dim = len(pts[0])
        for p in pts:
            if len(p) != dim:
                raise DimensionMismatch(f"point {p} is not in dimension {dim}")
        uniq = sorted(set(pts))
        return cls(dim, tuple(uniq), len(pts) - len(uniq))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return as_point(p) in self._index

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {p: i for i, p in enumerate(self.points)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def index(self, p) -> int:
        return self._index[as_point(p)]


def as_support(s) -> Support:
    return s if isinstance(s, Support) else Support.from_points(s)


@dataclass(frozen=True)
class Facet:
    """``<p, normal> >= offset`` on the polytope, with equality on ``incident``."""
    normal: RatPoint
    offset: Fraction | int
    incident: frozenset[int]


@dataclass(frozen=True)
class Polytope:
    ambient: int
    all_points: Support
    vertex_ids: tuple[int, ...]
    facets: tuple[Facet, ...]
    dim: int
    coords: tuple[int, ...] = field(default=())

    @property
    def vertices(self) -> list[RatPoint]:
        return [self.all_points.points[i] for i in self.vertex_ids]

    @property
    def full_dimensional(self) -> bool:
        return self.dim == self.ambient


@dataclass(frozen=True)
class Face:
    """A proper face: its vertices (point indices), a witness inner normal and dimension."""
    vertex_ids: frozenset[int]
    normal: RatPoint
    dim: int
    facet_set: frozenset[int]

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertex_ids))


def _check_alpha(s: Support, alpha) -> RatPoint:
    alpha = as_point(alpha)
    if len(alpha) != s.dim:
        raise InvalidNormal(f"normal has length {len(alpha)}, expected {s.dim}")
    if not any(alpha):
        raise InvalidNormal("zero normal")
    return alpha


def support_value(s, alpha):
    """``min <p, alpha>`` over the points of ``s``."""
    s = as_support(s)
    alpha = _check_alpha(s, alpha)
    return as_rat(min(dot(p, alpha) for p in s.points))


def face_indices(s, alpha) -> frozenset[int]:
    s = as_support(s)
    alpha = _check_alpha(s, alpha)
    vals = [dot(p, alpha) for p in s.points]
    h = min(vals)
    return frozenset(i for i, v in enumerate(vals) if v == h)


def face_of(s, alpha) -> frozenset[RatPoint]:
    """The minimisers ``(s)_alpha`` of ``<., alpha>`` on ``s``."""
    s = as_support(s)
    return frozenset(s.points[i] for i in face_indices(s, alpha))


def convex_hull(s) -> Polytope:
    """Vertices and facets of ``conv(s)``.

    For a lower-dimensional ``s`` the facets are relative to the affine hull:
    their normals are supported on ``Polytope.coords``, a coordinate set that
    is injective on that affine hull.
    """
    s = as_support(s)
    if len(s) == 0:
        raise EmptyInput("convex hull of an empty support")
    pts = s.points
    n = s.dim
    d = affine_dim(pts)
    if d == 0:
        return Polytope(n, s, (0,), (), 0, ())
    if d < n:
        p0 = pts[0]
        coords = tuple(independent_columns([[a - b for a, b in zip(p, p0)]
                                            for p in pts[1:]]))
    else:
        coords = tuple(range(n))
    proj = [tuple(p[j] for j in coords) for p in pts]
    scale = lcm_denominator(proj)
    ints = [tuple(int(c * scale) for c in p) for p in proj]
    cells, raw, _, _ = _lower.lower_cells(ints, 0, want_facets=True)
    vids = sorted({i for basis, _ in cells for i in basis})
    facets = []
    for nrm, const in sorted(raw.items()):
        full = [0] * n
        for j, c in zip(coords, nrm):
            full[j] = c
        offset = as_rat(Fraction(-const) / scale)
        inc = frozenset(i for i, p in enumerate(pts) if dot(p, full) == offset)
        facets.append(Facet(tuple(full), offset, inc))
    return Polytope(n, s, tuple(vids), tuple(facets), d, coords)


def enumerate_faces(p: Polytope, cap: int | None = None,
                    relative: bool = False) -> list[Face]:
    """All proper faces of dimension >= 1, each exactly once.

    Faces of a ``k``-face ``G`` are the maximal proper intersections of ``G``
    with the facets, so the lattice is walked top-down without any rank
    computations.  A non-full-dimensional polytope raises
    :class:`DegeneratePolytope` unless ``relative`` is set, in which case faces
    are taken relative to the affine hull.
    """
    if cap is None:
        cap = face_cap()
    if not p.full_dimensional and not relative:
        raise DegeneratePolytope(
            f"polytope has dimension {p.dim} in R^{p.ambient}")
    if p.dim < 2:
        return []
    vids = p.vertex_ids
    pos = {v: b for b, v in enumerate(vids)}
    fmasks = []
    for f in p.facets:
        m = 0
        for i in f.incident:
            b = pos.get(i)
            if b is not None:
                m |= 1 << b
        fmasks.append(m)

    found = {}
    level = []
    for m in fmasks:
        if m not in found:
            found[m] = p.dim - 1
            level.append(m)
    if len(found) > cap:
        raise ResourceLimit(f"face count exceeds the cap of {cap}")
    k = p.dim - 1
    while k > 1 and level:
        nxt = []
        for g in level:
            inter = {g & f for f in fmasks}
            inter.discard(g)
            inter.discard(0)
            cand = sorted(inter, key=lambda x: -x.bit_count())
            maximal = []
            for x in cand:
                if not any(x & y == x for y in maximal):
                    maximal.append(x)
            for x in maximal:
                if x not in found:
                    found[x] = k - 1
                    nxt.append(x)
            if len(found) > cap:
                raise ResourceLimit(f"face count exceeds the cap of {cap}")
        level = nxt
        k -= 1

    faces = []
    for m, dim in found.items():
        if dim < 1:
            continue
        ids = frozenset(vids[b] for b in range(len(vids)) if m >> b & 1)
        fset = frozenset(j for j, fm in enumerate(fmasks) if fm & m == m)
        normal = [0] * p.ambient
        for j in fset:
            for t, c in enumerate(p.facets[j].normal):
                normal[t] += c
        faces.append(Face(ids, tuple(normal), dim, fset))
    faces.sort(key=Face.key)
    return faces
