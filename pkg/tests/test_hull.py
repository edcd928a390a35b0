import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from bkkunmix import convex_hull, enumerate_faces, face_of, support_value
from bkkunmix.hull import (DegeneratePolytope, InvalidNormal, ResourceLimit,
                           Support)
from bkkunmix.ratgeom import EmptyInput, affine_dim, dot

from conftest import Q1, Q2, planar_hull

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]


def test_square_hull():
    p = convex_hull(SQUARE)
    assert sorted(p.vertices) == sorted(SQUARE)
    assert len(p.facets) == 4
    assert p.dim == 2 and p.full_dimensional


def test_example_union_has_four_vertices():
    p = convex_hull(Q1 + Q2)
    assert sorted(p.vertices) == [(0, 0), (0, 4), (4, 0), (4, 4)]


def test_collinear_is_one_dimensional():
    p = convex_hull([(0, 0), (1, 1), (2, 2)])
    assert p.dim == 1
    assert sorted(p.vertices) == [(0, 0), (2, 2)]
    with pytest.raises(DegeneratePolytope):
        enumerate_faces(p)


def test_empty_and_single_point():
    with pytest.raises(EmptyInput):
        convex_hull(Support.from_points([], 3))
    p = convex_hull([(1, 2, 3)])
    assert p.dim == 0 and p.vertices == [(1, 2, 3)]


def test_rational_hull():
    p = convex_hull([("1/2", 0), (0, "1/3"), (0, 0), ("1/4", "1/6")])
    assert len(p.vertices) == 3
    for f in p.facets:
        for i in f.incident:
            assert dot(p.all_points.points[i], f.normal) == f.offset


def test_support_value_examples():
    assert support_value(SQUARE, (1, 1)) == 0
    assert support_value(SQUARE, (-1, 0)) == -1
    assert support_value(Q1 + Q2, (0, 1)) == 0
    with pytest.raises(InvalidNormal):
        support_value(SQUARE, (0, 0))
    with pytest.raises(InvalidNormal):
        face_of(SQUARE, (1, 0, 0))


def test_face_of_examples():
    from bkkunmix import kuramoto_cycle
    assert face_of(SQUARE, (0, 1)) == {(0, 0), (1, 0)}
    assert face_of(SQUARE, (1, 1)) == {(0, 0)}
    s1 = kuramoto_cycle(2).supports[0]
    # S_1 = {0, e1-e2, e2-e1, e1, -e1}: <., (1,0)> is -1 at -e1 and at e2-e1
    assert face_of(s1, (1, 0)) == {(-1, 0), (-1, 1)}
    assert face_of(s1, (1, 1)) == {(-1, 0)}


def test_face_counts():
    assert len(enumerate_faces(convex_hull(SQUARE))) == 4
    cube = list(product((0, 1), repeat=3))
    faces = enumerate_faces(convex_hull(cube))
    assert len(faces) == 18
    assert sorted(f.dim for f in faces) == [1] * 12 + [2] * 6
    four = list(product((0, 1), repeat=4))
    # 8 cubes, 24 squares, 32 edges
    assert len(enumerate_faces(convex_hull(four))) == 64


def test_example_union_edges():
    p = convex_hull(Q1 + Q2)
    faces = enumerate_faces(p)
    assert len(faces) == 4
    for f in faces:
        assert face_of(Q1, f.normal) and face_of(Q2, f.normal)
        assert support_value(Q1, f.normal) == support_value(Q2, f.normal)


def test_face_cap():
    cube = list(product((0, 1), repeat=3))
    with pytest.raises(ResourceLimit, match="cap of 10"):
        enumerate_faces(convex_hull(cube), cap=10)


def test_face_cap_from_env(monkeypatch):
    monkeypatch.setenv("UNMIX_FACE_CAP", "5")
    with pytest.raises(ResourceLimit):
        enumerate_faces(convex_hull(list(product((0, 1), repeat=3))))


def test_relative_faces_of_flat_polygon():
    flat = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    faces = enumerate_faces(convex_hull(flat), relative=True)
    assert len(faces) == 4


def check_polytope(pts):
    p = convex_hull(pts)
    verts = p.vertices
    vset = set(verts)
    # facets: equality on incident points, strict inequality on other vertices
    for f in p.facets:
        assert any(f.normal)
        for i, q in enumerate(p.all_points.points):
            v = dot(q, f.normal)
            if i in f.incident:
                assert v == f.offset
            else:
                assert v > f.offset
        inc_pts = [p.all_points.points[i] for i in f.incident]
        assert affine_dim(inc_pts) == p.dim - 1
    # every vertex lies on at least dim facets
    for vid in p.vertex_ids:
        assert sum(vid in f.incident for f in p.facets) >= p.dim
    faces = enumerate_faces(p)
    keys = {f.key() for f in faces}
    assert len(keys) == len(faces)
    for f in faces:
        # the witness normal exposes exactly the face
        assert face_of(verts, f.normal) == {p.all_points.points[i] for i in f.vertex_ids}
        assert set(p.all_points.points[i] for i in f.vertex_ids) <= vset
        assert affine_dim([p.all_points.points[i] for i in f.vertex_ids]) == f.dim
        assert 1 <= f.dim < p.dim
    # closure: intersections are faces, vertices or empty
    for a in faces:
        for b in faces:
            common = a.vertex_ids & b.vertex_ids
            assert len(common) <= 1 or tuple(sorted(common)) in keys
    return p, faces


def random_full_dim(rng, n, k, cmax=3):
    while True:
        pts = [tuple(rng.randint(0, cmax) for _ in range(n)) for _ in range(k)]
        if affine_dim(pts) == n:
            return pts


@pytest.mark.parametrize("seed", range(40))
def test_polytope_invariants_random(seed):
    rng = random.Random(seed)
    n = 2 + seed % 3
    check_polytope(random_full_dim(rng, n, rng.randint(n + 1, 9)))


def test_planar_vertices_match_monotone_chain():
    rng = random.Random(7)
    for _ in range(50):
        pts = random_full_dim(rng, 2, rng.randint(3, 12), cmax=6)
        assert sorted(convex_hull(pts).vertices) == sorted(planar_hull(pts))


@settings(max_examples=30)
@given(st.integers(0, 10 ** 6))
def test_faces_invariant_under_point_order(seed):
    rng = random.Random(seed)
    pts = random_full_dim(rng, 3, 8)
    shuffled = pts[:]
    rng.shuffle(shuffled)
    # Support sorts its points, so vertex ids are comparable directly
    a = {f.key() for f in enumerate_faces(convex_hull(pts))}
    b = {f.key() for f in enumerate_faces(convex_hull(shuffled))}
    assert a == b
