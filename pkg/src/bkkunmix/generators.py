"""Support families and graph polytopes for the four application systems.

Node 0 is always the reference node: its coordinate vector is ``e_0 = 0``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .hull import Support
from .mixedvol import SupportSystem


@dataclass(frozen=True)
class Graph:
    """Undirected graph on nodes ``0 .. node_count - 1``; every node carries a loop."""
    node_count: int
    edges: frozenset[tuple[int, int]]
    loops: bool = True

    @classmethod
    def from_edges(cls, node_count: int, edges, loops: bool = True):
        norm = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if not (0 <= i < node_count and 0 <= j < node_count):
                raise ValueError(f"edge ({i}, {j}) outside 0..{node_count - 1}")
            if i == j:
                continue  # loops are implied
            norm.add((min(i, j), max(i, j)))
        g = cls(node_count, frozenset(norm), loops)
        g.validate()
        return g

    def neighbors(self, i: int) -> set[int]:
        out = {b for a, b in self.edges if a == i} | {a for a, b in self.edges if b == i}
        if self.loops:
            out.add(i)
        return out

    def validate(self):
        if self.node_count < 2:
            raise ValueError("a graph needs at least 2 nodes")
        if not any(0 in e for e in self.edges):
            raise ValueError("reference node 0 is isolated")
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        if len(seen) != self.node_count:
            warnings.warn(f"graph is disconnected ({len(seen)} of "
                          f"{self.node_count} nodes reachable from node 0)")

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def cycle_graph(N: int) -> Graph:
    if N < 3:
        raise ValueError("cycle graphs need N >= 3")
    return Graph.from_edges(N, [(i, (i + 1) % N) for i in range(N)])


def path_graph(N: int) -> Graph:
    if N < 2:
        raise ValueError("path graphs need N >= 2")
    return Graph.from_edges(N, [(i, i + 1) for i in range(N - 1)])


# IEEE 14-bus test case, branch list of the standard published data set
# (buses renumbered 1..14 -> 0..13, bus 1 = slack = reference node 0).
_IEEE14_BRANCHES = [
    (1, 2), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (4, 5), (4, 7), (4, 9),
    (5, 6), (6, 11), (6, 12), (6, 13), (7, 8), (7, 9), (9, 10), (9, 14),
    (10, 11), (12, 13), (13, 14),
]


def ieee14() -> Graph:
    return Graph.from_edges(14, [(a - 1, b - 1) for a, b in _IEEE14_BRANCHES])


def _unit(n: int, i: int) -> list[int]:
    v = [0] * n
    if i > 0:
        v[i - 1] = 1
    return v


def kuramoto_cycle(n: int) -> SupportSystem:
    """Supports of the synchronization system on a cycle of ``n + 1`` oscillators."""
    if n < 2:
        raise ValueError("kuramoto_cycle needs n >= 2")
    N = n + 1
    supports = []
    for i in range(1, n + 1):
        ei = _unit(n, i)
        pts = [[0] * n]
        for j in ((i + 1) % N, (i - 1) % N):
            ej = _unit(n, j)
            pts.append([a - b for a, b in zip(ei, ej)])
            pts.append([b - a for a, b in zip(ei, ej)])
        supports.append(Support.from_points(pts, n))
    return SupportSystem(n, tuple(supports),
                         tuple(f"S{i}" for i in range(1, n + 1)))


def noonburg(n: int) -> SupportSystem:
    """Supports of the Noonburg neural network system."""
    if n < 2:
        raise ValueError("noonburg needs n >= 2")
    supports = []
    for i in range(1, n + 1):
        ei = _unit(n, i)
        pts = [ei, [0] * n]
        for j in range(1, n + 1):
            if j != i:
                pts.append([a + 2 * b for a, b in zip(ei, _unit(n, j))])
        supports.append(Support.from_points(pts, n))
    return SupportSystem(n, tuple(supports),
                         tuple(f"S{i}" for i in range(1, n + 1)))


def loadflow_supports(g: Graph) -> SupportSystem:
    """The ``2n`` supports ``S_1, S_1', ..., S_n, S_n'`` in ``Z^(2n)``, ``n = N - 1``."""
    n = g.node_count - 1
    if n < 1:
        raise ValueError("load flow needs at least 2 nodes")
    zero = [0] * (2 * n)
    supports = []
    labels = []
    for i in range(1, n + 1):
        nb = g.neighbors(i)
        supports.append(Support.from_points(
            [zero] + [_unit(n, i) + _unit(n, j) for j in nb], 2 * n))
        supports.append(Support.from_points(
            [zero] + [_unit(n, j) + _unit(n, i) for j in nb], 2 * n))
        labels += [f"S{i}", f"S{i}'"]
    return SupportSystem(2 * n, tuple(supports), tuple(labels))


def adjacency_polytope(g: Graph) -> Support:
    """Point set ``{0} + {(e_i, e_j)}`` over directed edges and loops."""
    n = g.node_count - 1
    pts = [[0] * (2 * n)]
    for i, j in g.edges:
        pts.append(_unit(n, i) + _unit(n, j))
        pts.append(_unit(n, j) + _unit(n, i))
    if g.loops:
        for i in range(1, n + 1):
            pts.append(_unit(n, i) + _unit(n, i))
    return Support.from_points(pts, 2 * n)


def _compositions(n: int, total: int):
    """Exponent vectors in ``N_0^n`` with coordinate sum ``total``."""
    for combo in combinations_with_replacement(range(n), total):
        a = [0] * n
        for k in combo:
            a[k] += 1
        yield a


def tensor_eigen_supports(n: int, m: int, mp: int, generalized: bool = False,
                          linear_lambda: bool = False) -> SupportSystem:
    """Supports of the tensor eigenpair system (last coordinate: degree in lambda).

    ``mp`` is the order ``m'`` of the right-hand side.  ``generalized`` gives
    the B-eigenpair formulation.  The last support is the linear normalization
    ``{e_1, ..., e_n, 0}``; ``linear_lambda`` adds the lambda monomial to it.
    """
    if min(n, m, mp) < 2:
        raise ValueError("tensor_eigen_supports needs n, m, m' >= 2")
    mbar = mp - 1
    homog = [a + [0] for a in _compositions(n, m - 1)]
    supports = []
    if generalized:
        rhs = [a + [1] for a in _compositions(n, mbar)]
        t = Support.from_points(homog + rhs, n + 1)
        supports = [t] * n
    else:
        for i in range(1, n + 1):
            top = [mbar * c for c in _unit(n + 1, i)[:n]] + [1]
            supports.append(Support.from_points(homog + [top], n + 1))
    linear = [_unit(n + 1, i)[:n] + [0] for i in range(1, n + 1)] + [[0] * (n + 1)]
    if linear_lambda:
        linear.append([0] * n + [1])
    supports.append(Support.from_points(linear, n + 1))
    notes = ()
    if min(n, m, mp) <= 2:
        notes = ("parameters outside the n, m, m' > 2 range covered by the "
                 "equal-bound argument",)
    labels = tuple((f"T{i}" if generalized else f"S{i}") for i in range(1, n + 2))
    return SupportSystem(n + 1, tuple(supports), labels, notes)
