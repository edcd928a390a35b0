"""Lower-hull walk over a lifted point configuration.

Every point ``x_k`` is lifted to ``(x_k, w_k)``.  The lower facets of the
lifted configuration project to the cells of a regular subdivision; with a
generic lift all of them are simplices.  We find one lower simplex with a
small exact simplex-method phase and then walk the dual graph, crossing one
ridge at a time.

A cell is kept as a *tableau*: for the basis matrix ``M`` (the cell's points as
homogeneous columns ``[x; 1]``) we store ``D = det(M)`` and the integer matrix
``T = adj(M) @ A`` over all homogeneous points ``A``; ``T[:, k] / D`` are the
barycentric coordinates of point ``k``.  The tableau is solved in floating
point, rounded, and accepted only if ``M @ T == D * A`` holds exactly;
otherwise it is recomputed with rational elimination.

The lift used here is ``w_k = r_k - K |x_k - c|^2`` with ``r_k`` uniform in
``[0, 2^20)`` and ``K = 2^20``.  The concave term pushes every point that is
not a vertex of ``conv(points)`` strictly above the lower hull (the gap is at
least ``K`` for lattice points), so cells only ever use polytope vertices and
the walk doubles as a vertex/facet finder.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from math import gcd

import numpy as np

from .ratgeom import det, independent_rows

LIFT_BITS = 20
CONCAVITY = 1 << LIFT_BITS
MAX_ATTEMPTS = 32
_MASK64 = (1 << 64) - 1
_SAFE = 1 << 62
_TIE_RTOL = 1e-9
_EXACT_FLOAT = 1 << 53


class GenericityFailure(RuntimeError):
    """No simplicial lower hull was found for any of the derived seeds."""

    def __init__(self, seeds):
        self.seeds = list(seeds)
        super().__init__(
            f"lifting stayed non-generic after {len(self.seeds)} attempts; "
            f"seeds tried: {self.seeds}")


class _NonGeneric(Exception):
    pass


def splitmix64(state: int):
    """Infinite splitmix64 stream; identical on every platform."""
    state &= _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def derived_seeds(seed: int, count: int = MAX_ATTEMPTS) -> list[int]:
    """``seed`` followed by ``count - 1`` seeds drawn from its splitmix stream."""
    seeds = [seed & _MASK64]
    stream = splitmix64(seed ^ 0xD1B54A32D192ED03)
    while len(seeds) < count:
        seeds.append(next(stream))
    return seeds


def draw_lifts(points: list[tuple[int, ...]], seed: int) -> list[int]:
    """Integer lift per point: random part from ``seed`` plus the concave term."""
    stream = splitmix64(seed)
    n = len(points[0])
    m = len(points)
    centre = [round(sum(p[j] for p in points) / m) for j in range(n)]
    lifts = []
    for p in points:
        r = next(stream) >> (64 - LIFT_BITS)
        q = sum((a - c) * (a - c) for a, c in zip(p, centre))
        lifts.append(r - CONCAVITY * q)
    return lifts


def _fits(*bounds) -> bool:
    total = 1
    for b in bounds:
        total *= max(int(b), 1)
    return total < _SAFE


def _absmax(a) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(int(a.max())), abs(int(a.min()))))


def _exact_tableau(M: list[list[int]], A: list[list[int]]):
    """Rational Gauss-Jordan: return (D, T) with T = adj(M) @ A."""
    k = len(M)
    m = len(A[0])
    rows = [[Fraction(x) for x in M[i]] + [Fraction(x) for x in A[i]]
            for i in range(k)]
    det = Fraction(1)
    for c in range(k):
        piv = next(i for i in range(c, k) if rows[i][c] != 0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        p = rows[c][c]
        det *= p
        pr = [x / p for x in rows[c]]
        rows[c] = pr
        for i in range(k):
            if i != c and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
    D = int(det)
    T = [[int(x * D) for x in row[k:k + m]] for row in rows]
    return D, T


class LowerHullWalk:
    """Walk the simplicial lower hull of integer points lifted by ``lifts``."""

    def __init__(self, points: list[tuple[int, ...]], lifts: list[int]):
        self.points = points
        self.m = len(points)
        self.n = len(points[0])
        cols = [list(p) + [1] for p in points]
        big = max((abs(x) for col in cols for x in col), default=1)
        self.small = big < (1 << 40)
        dtype = np.int64 if self.small else object
        self.A = np.array(cols, dtype=dtype).T.copy()
        self.Af = np.array(cols, dtype=float).T.copy()
        wmax = max(abs(w) for w in lifts)
        self.w = np.array(lifts, dtype=np.int64 if wmax < (1 << 50) else object)
        self.wmax = wmax
        self.amax = big

    # -- tableau -----------------------------------------------------------
    def tableau(self, basis, extra=None, D=None):
        """Return (D, T) for ``basis``; ``extra`` is an optional extra column.

        ``D`` must be the exact determinant when given; otherwise it is
        computed with fraction-free elimination.
        """
        A = self.A if extra is None else np.column_stack([self.A, extra])
        if D is None:
            D = det([[int(x) for x in row] for row in self.A[:, basis]])
        if self.small and 0 < abs(D) < 2 ** 40:
            Af = self.Af if extra is None else A.astype(float)
            Mf = self.Af[:, basis]
            try:
                Tf = np.linalg.solve(Mf, Af) * D
                tmax = np.abs(Tf).max()
                if tmax < 2.0 ** 40:
                    Tr = np.rint(Tf)
                    # float products and sums stay exact below 2^53
                    bound = (int(tmax) + 1) * self.amax * len(basis)
                    if (bound < _EXACT_FLOAT and abs(D) * self.amax < _EXACT_FLOAT
                            and np.array_equal(Mf @ Tr, D * Af)):
                        return D, Tr.astype(np.int64)
            except np.linalg.LinAlgError:
                pass
        M = [[int(x) for x in row] for row in self.A[:, basis]]
        Al = [[int(x) for x in row] for row in A]
        D2, T = _exact_tableau(M, Al)
        if D2 != D:
            raise AssertionError("determinant bookkeeping out of step")
        Tarr = np.array(T, dtype=object)
        if _absmax(Tarr) < (1 << 40):
            Tarr = Tarr.astype(np.int64)
        return D, Tarr

    def reduced_costs(self, basis, D, T):
        """``D * (w_k - l(x_k))`` for every point, ``l`` the cell's lifted plane."""
        wb = self.w[list(basis)]
        m = self.m
        Tp = T[:, :m]
        if (T.dtype != object and self.w.dtype != object
                and _fits(self.wmax, _absmax(Tp), len(basis) + 1)
                and _fits(self.wmax, abs(D), 2)):
            return self.w * D - wb @ Tp
        wo = self.w.astype(object)
        return wo * D - wb.astype(object) @ Tp.astype(object)

    # -- start ---------------------------------------------------------------
    def initial_basis(self):
        homog = [list(p) + [1] for p in self.points]
        basis = independent_rows(homog)
        if len(basis) != self.n + 1:
            raise ValueError("point set is not full-dimensional")
        return basis

    def first_cell(self):
        """Exact simplex method (Bland's rule) for a lower cell."""
        basis = self.initial_basis()
        extra = self.A[:, basis].sum(axis=1)
        m = self.m
        while True:
            D, T = self.tableau(basis, extra)
            s = 1 if D > 0 else -1
            R = self.reduced_costs(basis, D, T) * s
            inb = np.zeros(m, dtype=bool)
            inb[basis] = True
            neg = np.nonzero((R < 0) & ~inb)[0]
            if len(neg) == 0:
                if np.any((R == 0) & ~inb):
                    raise _NonGeneric
                return tuple(sorted(basis))
            k = int(neg[0])
            col = T[:, k] * s
            rhs = T[:, m] * s
            best = None
            for j in range(len(basis)):
                if col[j] > 0:
                    key = (Fraction(int(rhs[j]), int(col[j])), basis[j])
                    if best is None or key < best[0]:
                        best = (key, j)
            basis[best[1]] = k

    # -- walk ------------------------------------------------------------------
    def walk(self, want_facets=False):
        """Enumerate all lower cells.

        Returns ``(cells, facets)`` where ``cells`` is a list of
        ``(sorted basis tuple, |det|)`` and ``facets`` maps a primitive inner
        normal (scaled integer coordinates) to the integer ``c`` with
        ``<normal, x> + c >= 0`` on the point set (only when requested).
        """
        start = self.first_cell()
        mask0 = 0
        for i in start:
            mask0 |= 1 << i
        seen = {mask0}
        stack = [(start, mask0, None)]
        cells = []
        facets = {} if want_facets else None
        m = self.m
        while stack:
            basis, mask, D = stack.pop()
            D, T = self.tableau(list(basis), D=D)
            s = 1 if D > 0 else -1
            R = self.reduced_costs(basis, D, T) * s
            inb = np.zeros(m, dtype=bool)
            inb[list(basis)] = True
            Rnb = R[~inb]
            if np.any(Rnb <= 0):
                if np.any(Rnb < 0):
                    raise AssertionError("walked off the lower hull")
                raise _NonGeneric
            cells.append((basis, abs(D)))
            Tn = T * s
            cand = Tn < 0
            has = cand.any(axis=1)
            if want_facets and not has.all():
                self._record_facets(basis, D, np.nonzero(~has)[0], facets)
            rows = np.nonzero(has)[0]
            if len(rows) == 0:
                continue
            Rf = R.astype(float)
            Tf = Tn[rows].astype(float)
            with np.errstate(divide="ignore", invalid="ignore"):
                ratio = np.where(cand[rows], Rf[None, :] / -Tf, np.inf)
            arg = ratio.argmin(axis=1)
            best = ratio[np.arange(len(rows)), arg]
            close = (ratio <= best[:, None] * (1 + _TIE_RTOL)).sum(axis=1)
            for idx, r in enumerate(rows):
                k = int(arg[idx])
                if close[idx] > 1:
                    k = self._exact_argmin(R, Tn[r], ratio[idx], best[idx])
                leave = basis[r]
                nmask = mask ^ (1 << leave) ^ (1 << k)
                if nmask in seen:
                    continue
                seen.add(nmask)
                # Cramer: swapping column r for point k gives det T[r, k];
                # re-sorting moves that column |p - r| places
                nb = list(basis)
                del nb[r]
                p = bisect_left(nb, k)
                nb.insert(p, k)
                nd = int(T[r, k]) * (-1 if (p - r) % 2 else 1)
                stack.append((tuple(nb), nmask, nd))
        return cells, facets

    @staticmethod
    def _exact_argmin(R, trow, ratio_row, best):
        ks = np.nonzero(ratio_row <= best * (1 + _TIE_RTOL))[0]
        vals = sorted((Fraction(int(R[k]), -int(trow[k])), int(k)) for k in ks)
        if len(vals) > 1 and vals[0][0] == vals[1][0]:
            raise _NonGeneric
        return vals[0][1]

    def _record_facets(self, basis, D, rows, facets):
        """Inner facet normals through the ridges ``rows`` of a boundary cell.

        Row ``r`` of ``adj(M)`` is the affine function vanishing on the ridge
        opposite ``basis[r]``.
        """
        s = 1 if D > 0 else -1
        B = list(basis)
        k = len(B)
        Y = None
        try:
            Mf = self.Af[:, B]
            E = np.eye(k)[rows]
            Yf = np.linalg.solve(Mf.T, E.T).T * D
            ymax = np.abs(Yf).max()
            if (ymax + 1) * self.amax * k < _EXACT_FLOAT and abs(D) < _EXACT_FLOAT:
                Yr = np.rint(Yf)
                if np.array_equal(Yr @ Mf, D * E):
                    Y = Yr.astype(np.int64) * s
        except np.linalg.LinAlgError:
            pass
        if Y is None:
            Mt = [[int(x) for x in col] for col in self.A[:, B].T]
            ident = [[int(i == j) for j in range(k)] for i in range(k)]
            _, adjT = _exact_tableau(Mt, ident)
            Y = np.array([[s * int(adjT[j][r]) for j in range(k)] for r in rows],
                         dtype=object)
        else:
            Y = np.unique(Y, axis=0)
        for y in Y.tolist():
            g = gcd(*y[:-1])
            normal = tuple(v // g for v in y[:-1])
            if normal not in facets:
                facets[normal] = Fraction(y[-1], g)


def lower_cells(points, seed, want_facets=False):
    """Triangulate ``points`` (integer tuples, full-dimensional).

    Tries up to :data:`MAX_ATTEMPTS` derived seeds.  Returns
    ``(cells, facets, lifts, seed_used)``.
    """
    tried = []
    for s in derived_seeds(seed):
        tried.append(s)
        lifts = draw_lifts(points, s)
        walker = LowerHullWalk(points, lifts)
        try:
            cells, facets = walker.walk(want_facets)
        except _NonGeneric:
            continue
        return cells, facets, lifts, s
    raise GenericityFailure(tried)
