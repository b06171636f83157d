import numpy as np
import pytest

from equiprojective import build
from equiprojective.constructions import cube, prism, square_pyramid, tetrahedron
from equiprojective.errors import (
    MeshError,
    NonConvexFaceError,
    NonConvexSolidError,
    NonPlanarFaceError,
    OpenMeshError,
    OrientationError,
)

CUBE_V = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1), (1, 1, 1), (0, 1, 1)]
CUBE_F = [[0, 3, 2, 1], [4, 5, 6, 7], [0, 1, 5, 4], [1, 2, 6, 5], [2, 3, 7, 6], [3, 0, 4, 7]]


def test_cube_counts():
    P = build(CUBE_V, CUBE_F)
    assert (P.V, P.E, P.F) == (8, 12, 6)


def test_reversed_face_is_orientation_error():
    faces = [f[:] for f in CUBE_F]
    faces[1] = faces[1][::-1]
    with pytest.raises(OrientationError):
        build(CUBE_V, faces)


def test_apex_below_base_is_convexity_error():
    # same combinatorics as a square pyramid, apex dragged through the base
    verts = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (0.5, 0.5, -1.0)]
    faces = [[3, 2, 1, 0], [0, 1, 4], [1, 2, 4], [2, 3, 4], [3, 0, 4]]
    with pytest.raises(NonConvexSolidError):
        build(verts, faces)


def test_dented_solid_is_convexity_error():
    # an octahedron with one apex pushed inside: every face is still planar and convex
    verts = [(1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0), (0, 0, 1), (0, 0, 0.2)]
    up = [[0, 1, 4], [1, 2, 4], [2, 3, 4], [3, 0, 4]]
    down = [[1, 0, 5], [2, 1, 5], [3, 2, 5], [0, 3, 5]]
    with pytest.raises(NonConvexSolidError):
        build(verts, up + down)


def test_open_mesh():
    with pytest.raises(OpenMeshError):
        build(CUBE_V, CUBE_F[:-1])


def test_non_planar_face():
    verts = [list(v) for v in CUBE_V]
    verts[6] = [1, 1, 1.01]
    with pytest.raises(NonPlanarFaceError):
        build(verts, CUBE_F)


def test_non_convex_face():
    # a pentagonal prism whose base has a reflex corner
    base = [(0, 0), (2, 0), (2, 2), (1, 0.5), (0, 2)]
    verts = [(x, y, 0) for x, y in base] + [(x, y, 1) for x, y in base]
    faces = [[4, 3, 2, 1, 0], [5, 6, 7, 8, 9]] + [[i, (i + 1) % 5, 5 + (i + 1) % 5, 5 + i] for i in range(5)]
    with pytest.raises((NonConvexFaceError, NonConvexSolidError)):
        build(verts, faces)


def test_bad_index():
    with pytest.raises(MeshError):
        build(CUBE_V, [[0, 1, 99]] + CUBE_F[1:])


class TestFaceNormal:
    def test_cube_top_and_bottom(self):
        P = build(CUBE_V, CUBE_F)
        assert np.allclose(P.face_normal(1), (0, 0, 1))
        assert np.allclose(P.face_normal(0), (0, 0, -1))

    def test_tetrahedron_base(self):
        T = tetrahedron()
        base = [f for f in range(T.F) if np.allclose(T.vertices[list(T.faces[f]), 2], 0)]
        assert len(base) == 1 and np.allclose(T.face_normal(base[0]), (0, 0, -1))


class TestParallelFacePairs:
    def test_cube(self):
        assert len(cube().parallel_face_pairs()) == 3

    def test_tetrahedron(self):
        assert tetrahedron().parallel_face_pairs() == set()

    def test_triangular_prism(self):
        P = prism(3)
        pairs = P.parallel_face_pairs()
        assert len(pairs) == 1
        (f, g), = pairs
        assert len(P.faces[f]) == len(P.faces[g]) == 3


@pytest.mark.parametrize("make", [cube, tetrahedron, square_pyramid, lambda: prism(6)])
def test_structural_invariants(make):
    P = make()
    assert sum(P.face_sizes()) == 2 * P.E
    assert P.V - P.E + P.F == 2
    Q = build(P.vertices, P.faces)
    assert Q.same_combinatorics(P) and np.array_equal(Q.vertices, P.vertices)
    for f, g in P.parallel_face_pairs():
        assert f != g and (g, f) not in P.parallel_face_pairs()
