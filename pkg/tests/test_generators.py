import warnings

import pytest

from bkkunmix import (adjacency_polytope, check_semimixed, check_theorem2,
                      convex_hull, cycle_graph, ieee14, kuramoto_cycle,
                      loadflow_supports, mixed_volume, noonburg, normalized_volume,
                      path_graph, tensor_eigen_supports, unmixed_bkk)
from bkkunmix.generators import Graph
from bkkunmix.unmix import Grouping


def pts(s):
    return set(s.points)


def test_kuramoto_n2():
    s1, s2 = kuramoto_cycle(2).supports
    assert pts(s1) == {(0, 0), (1, -1), (-1, 1), (1, 0), (-1, 0)}
    assert pts(s2) == {(0, 0), (-1, 1), (1, -1), (0, 1), (0, -1)}
    assert normalized_volume(kuramoto_cycle(2).union()) == 6


def test_kuramoto_sizes():
    for n in range(2, 7):
        sys = kuramoto_cycle(n)
        assert len(sys.supports) == n and sys.dim == n
        assert all(len(s) == 5 for s in sys.supports)
    with pytest.raises(ValueError):
        kuramoto_cycle(1)


def test_noonburg():
    s1, s2 = noonburg(2).supports
    assert pts(s1) == {(1, 0), (0, 0), (1, 2)}
    assert pts(s2) == {(0, 1), (0, 0), (2, 1)}
    for n in (2, 3, 4, 5):
        assert all(len(s) == n + 1 for s in noonburg(n).supports)
    with pytest.raises(ValueError):
        noonburg(1)


def test_noonburg_values():
    for n, value in ((2, 5), (3, 21)):
        sys = noonburg(n)
        bkk, rep = unmixed_bkk(sys)
        assert rep.theorem2
        assert bkk == mixed_volume(sys) == value


def test_loadflow_path2():
    sys = loadflow_supports(path_graph(2))
    assert [pts(s) for s in sys.supports] == [{(0, 0), (1, 0), (1, 1)},
                                              {(0, 0), (0, 1), (1, 1)}]
    assert sys.labels == ("S1", "S1'")
    bkk, rep = unmixed_bkk(sys)
    assert bkk == 2 == mixed_volume(sys)
    assert rep.theorem2


def test_loadflow_three_cycle():
    sys = loadflow_supports(cycle_graph(3))
    assert len(sys.supports) == 4 and sys.dim == 4
    rep = check_theorem2(sys)
    assert rep.theorem2
    assert {v.satisfied_by for v in rep.verdicts} <= {"A", "B", "C"}
    assert "C" in {v.satisfied_by for v in rep.verdicts}


def test_adjacency_polytope():
    assert pts(adjacency_polytope(path_graph(2))) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert len(adjacency_polytope(cycle_graph(3))) == 9
    for g in (path_graph(2), path_graph(4), cycle_graph(3), cycle_graph(5)):
        assert pts(adjacency_polytope(g)) == pts(loadflow_supports(g).union())


def test_graphs():
    assert cycle_graph(3).edges == {(0, 1), (1, 2), (0, 2)}
    with pytest.raises(ValueError):
        cycle_graph(2)
    g = ieee14()
    assert g.node_count == 14 and len(g.edges) == 20
    assert len(loadflow_supports(g).supports) == 26
    with pytest.raises(ValueError, match="isolated"):
        Graph.from_edges(3, [(1, 2)])
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        Graph.from_edges(4, [(0, 1), (2, 3)])
    assert any("disconnected" in str(x.message) for x in w)


def test_tensor_standard_and_generalized():
    s = tensor_eigen_supports(2, 3, 2, linear_lambda=True)
    assert [pts(x) for x in s.supports] == [
        {(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1)},
        {(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 1, 1)},
        {(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)},
    ]
    assert pts(tensor_eigen_supports(2, 3, 2).supports[2]) == {
        (1, 0, 0), (0, 1, 0), (0, 0, 0)}
    t = tensor_eigen_supports(2, 3, 2, generalized=True)
    assert pts(t.supports[0]) == pts(t.supports[1]) == {
        (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1)}
    assert s.notes and not tensor_eigen_supports(3, 3, 3).notes
    with pytest.raises(ValueError):
        tensor_eigen_supports(2, 1, 2)


@pytest.mark.parametrize("params", [(2, 3, 2), (2, 4, 3), (3, 3, 3)])
def test_tensor_hulls_agree(params):
    n = params[0]
    std = tensor_eigen_supports(*params)
    gen = tensor_eigen_supports(*params, generalized=True)
    block = [p for s in std.supports[:n] for p in s.points]
    hull = convex_hull(block)
    # T lies in conv of the standard block and has the same hull
    for p in gen.supports[0].points:
        assert all(sum(a * b for a, b in zip(p, f.normal)) >= f.offset for f in hull.facets)
    assert sorted(hull.vertices) == sorted(convex_hull(gen.supports[0]).vertices)


@pytest.mark.parametrize("params", [(2, 3, 2), (2, 4, 3)])
def test_tensor_linear_lambda_keeps_the_value(params):
    a = mixed_volume(tensor_eigen_supports(*params))
    b = mixed_volume(tensor_eigen_supports(*params, linear_lambda=True))
    assert a == b


def test_tensor_semimixed():
    g = Grouping(((0, 1), (2,)))
    assert check_semimixed(tensor_eigen_supports(2, 3, 2), g)
    assert check_semimixed(tensor_eigen_supports(3, 3, 2), Grouping(((0, 1, 2), (3,))))
