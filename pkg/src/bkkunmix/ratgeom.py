"""Exact rational arithmetic and the small linear-algebra kernel.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  Coordinates whose denominator is 1 are kept as plain
``int`` so that lattice inputs stay on the integer fast path; ``Fraction`` and
``int`` compare and hash consistently, so mixing them is harmless.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

Rat = Fraction
RatPoint = tuple  # tuple of int | Fraction
RatMatrix = Sequence[Sequence]


class DimensionMismatch(ValueError):
    """Raised when operands have incompatible shapes."""


class EmptyInput(ValueError):
    """Raised when an operation needs at least one element."""


def as_rat(x) -> int | Fraction:
    """Coerce ``x`` (int, Fraction, or a ``"p/q"`` string) to a canonical rational.

    Values with denominator 1 come back as ``int``.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        x = Fraction(x.strip())
    elif isinstance(x, Rational):
        x = Fraction(x)
    elif isinstance(x, float):
        if not x.is_integer():
            raise TypeError(f"refusing inexact float coordinate {x!r}")
        return int(x)
    else:
        x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def as_point(coords: Iterable) -> RatPoint:
    return tuple(as_rat(c) for c in coords)


def format_rat(x) -> str:
    """Serialise a rational as ``"p"`` or ``"p/q"``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s) -> int | Fraction:
    return as_rat(s)


def dot(p: Sequence, q: Sequence):
    if len(p) != len(q):
        raise DimensionMismatch(f"length {len(p)} vs {len(q)}")
    return sum(a * b for a, b in zip(p, q))


def is_integral(rows: Iterable[Sequence]) -> bool:
    return all(isinstance(c, int) or Fraction(c).denominator == 1
               for row in rows for c in row)


def _check_rect(m: RatMatrix) -> tuple[int, int]:
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    for row in m:
        if len(row) != ncols:
            raise DimensionMismatch("ragged matrix")
    return nrows, ncols


def _clear_rows(m: RatMatrix) -> tuple[list[list[int]], int]:
    """Scale each row to integers; return the rows and the product of the scales."""
    out = []
    scale = 1
    for row in m:
        row = [as_rat(c) for c in row]
        den = 1
        for c in row:
            d = Fraction(c).denominator
            den = den * d // gcd(den, d)
        out.append([int(c * den) for c in row])
        scale *= den
    return out, scale


def _bareiss(a: list[list[int]], ncols: int) -> tuple[int, int]:
    """In-place fraction-free elimination on an integer matrix.

    Returns ``(rank, sign * last_pivot)``; for a square full-rank matrix the
    second value is the determinant.
    """
    nrows = len(a)
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            sign = -sign
        pr = a[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (row[j] * p - f * pr[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r, sign * prev


def det(m: RatMatrix):
    """Exact determinant by Bareiss elimination.

    >>> det([[1, 0], [4, 4]])
    4
    """
    nrows, ncols = _check_rect(m)
    if nrows != ncols:
        raise DimensionMismatch(f"det of a {nrows}x{ncols} matrix")
    if nrows == 0:
        return 1
    a, scale = _clear_rows(m)
    r, d = _bareiss(a, ncols)
    if r < nrows:
        return 0
    return as_rat(Fraction(d, scale))


def rank(m: RatMatrix) -> int:
    if len(m) == 0:
        return 0
    _, ncols = _check_rect(m)
    a, _ = _clear_rows(m)
    r, _ = _bareiss(a, ncols)
    return r


def transpose(m: RatMatrix) -> list[list]:
    return [list(col) for col in zip(*m)]


def affine_dim(pts: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of ``pts``."""
    if len(pts) == 0:
        raise EmptyInput("affine_dim of an empty point list")
    p0 = pts[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    if not diffs:
        return 0
    return rank(diffs)


def independent_columns(m: RatMatrix) -> list[int]:
    """Indices of a maximal set of linearly independent columns (leftmost first)."""
    if len(m) == 0:
        return []
    _, ncols = _check_rect(m)
    a, _ = _clear_rows(m)
    nrows = len(a)
    cols = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (row[j] * p - f * pr[j]) // prev
            row[c] = 0
        prev = p
        cols.append(c)
        r += 1
    return cols


def independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Greedy indices of a maximal linearly independent subset of ``rows``."""
    return independent_columns(transpose(rows)) if rows else []


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def lcm_denominator(rows: Iterable[Sequence]) -> int:
    den = 1
    for row in rows:
        for c in row:
            d = Fraction(c).denominator
            den = den * d // gcd(den, d)
    return den
