"""Inclusion-exclusion mixed volume oracle.

``mvol(Q_1, ..., Q_n) = sum over nonempty I of (-1)^(n-|I|) vol_n(sum_{i in I} Q_i)``
is the coefficient of ``lambda_1 ... lambda_n`` in ``vol_n(sum lambda_i Q_i)``;
with this normalization ``mvol(Q, ..., Q) = n! vol_n(Q)``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .hull import ResourceLimit, Support, as_support, convex_hull
from .ratgeom import DimensionMismatch, as_rat
from .volume import volume_and_vertices

DEFAULT_MV_CAP = 10
PRUNE_ABOVE = 5000


class NonSquareSystem(ValueError):
    """The number of supports differs from the ambient dimension."""


@dataclass(frozen=True)
class SupportSystem:
    dim: int
    supports: tuple[Support, ...]
    labels: tuple[str, ...] | None = None
    notes: tuple[str, ...] = ()

    @classmethod
    def from_lists(cls, supports: Sequence, dim: int | None = None,
                   labels=None, notes=()):
        sups = [as_support(s) if isinstance(s, Support)
                else Support.from_points(s, dim) for s in supports]
        if dim is None:
            if not sups:
                raise ValueError("empty system needs an explicit dim")
            dim = sups[0].dim
        for s in sups:
            if s.dim != dim:
                raise DimensionMismatch(f"support in R^{s.dim}, system in R^{dim}")
        return cls(dim, tuple(sups), tuple(labels) if labels else None,
                   tuple(notes))

    def __len__(self):
        return len(self.supports)

    def union(self) -> Support:
        return Support.from_points([p for s in self.supports for p in s.points],
                                   self.dim)

    def is_square(self) -> bool:
        return len(self.supports) == self.dim

    def replace(self, supports) -> "SupportSystem":
        return SupportSystem.from_lists(supports, self.dim, self.labels,
                                        self.notes)


def _sum_points(a, b):
    return {tuple(x + y for x, y in zip(p, q)) for p in a for q in b}


def minkowski_sum(a, b) -> Support:
    """Deduplicated pairwise sums; above 5000 points, pruned to hull vertices."""
    a, b = as_support(a), as_support(b)
    if a.dim != b.dim:
        raise DimensionMismatch(f"R^{a.dim} + R^{b.dim}")
    s = Support.from_points(_sum_points(a.points, b.points), a.dim)
    if len(s) > PRUNE_ABOVE:
        s = Support.from_points(convex_hull(s).vertices, a.dim)
    return s


def mixed_volume(sys: SupportSystem, seed: int = 0, cap: int = DEFAULT_MV_CAP,
                 threads: int = 1):
    """Mixed volume by inclusion-exclusion over all ``2^n - 1`` subset sums.

    Subset sums are built from the vertex set of the next-smaller sum, which
    never changes any volume.
    """
    n = sys.dim
    if len(sys.supports) != n:
        raise NonSquareSystem(f"{len(sys.supports)} supports in R^{n}")
    if n > cap:
        raise ResourceLimit(f"mixed volume oracle limited to n <= {cap}, got {n}")
    reduced = {}
    vols = {}

    def evaluate(mask):
        top = mask.bit_length() - 1
        rest = mask ^ (1 << top)
        s = sys.supports[top]
        pts = s.points if rest == 0 else _sum_points(reduced[rest], s.points)
        sup = Support.from_points(pts, n)
        vol, vids = volume_and_vertices(sup, seed)
        if vids is not None:
            kept = [sup.points[i] for i in vids]
        elif len(sup) > PRUNE_ABOVE:
            kept = convex_hull(sup).vertices
        else:
            kept = list(sup.points)
        return mask, vol, kept

    # subsets of equal size only depend on smaller ones
    by_size = [[] for _ in range(n + 1)]
    for mask in range(1, 1 << n):
        by_size[mask.bit_count()].append(mask)
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for k in range(1, n + 1):
            masks = by_size[k]
            results = pool.map(evaluate, masks) if pool else map(evaluate, masks)
            for mask, vol, kept in results:
                vols[mask] = vol
                reduced[mask] = kept
            for mask in by_size[k - 1]:
                reduced.pop(mask, None)
    finally:
        if pool:
            pool.shutdown()
    total = Fraction(0)
    for mask, vol in vols.items():
        sign = -1 if (n - mask.bit_count()) % 2 else 1
        total += sign * Fraction(vol)
    return as_rat(total / factorial(n))
