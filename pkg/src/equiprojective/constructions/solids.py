"""Closed-form coordinates for the base solids, all with unit edge length."""

from __future__ import annotations

from itertools import permutations, product
from math import cos, pi, sin, sqrt

import numpy as np

from ..errors import DegenerateHullError, DomainError
from ..numeric import DEFAULT_TOL, Tolerance, hull3d, parallel
from ..polyhedron import Polyhedron, build

PHI = (1 + sqrt(5)) / 2


def _signed_perms(base, even_only=False):
    out = set()
    perms = permutations(range(3))
    if even_only:
        perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    for p in perms:
        for signs in product((1, -1), repeat=3):
            out.add(tuple(round(signs[i] * base[p[i]], 15) + 0.0 for i in range(3)))
    return sorted(out)


def cube(edge: float = 1.0) -> Polyhedron:
    h = edge / 2
    return hull3d([(x, y, z) for x in (-h, h) for y in (-h, h) for z in (-h, h)])


def box(a: float, b: float, c: float) -> Polyhedron:
    return hull3d([(x, y, z) for x in (0, a) for y in (0, b) for z in (0, c)])


def regular_polygon(k: int, radius: float = 1.0, phase: float = 0.0) -> np.ndarray:
    return np.array([(radius * cos(phase + 2 * pi * i / k), radius * sin(phase + 2 * pi * i / k)) for i in range(k)])


def prism(k: int = 3, radius: float = 1.0, height: float = 1.0) -> Polyhedron:
    """Right prism over a regular k-gon, bases at z = 0 and z = height."""
    if k < 3:
        raise DomainError("a prism needs k >= 3")
    return prism_over(regular_polygon(k, radius), height)


def prism_over(polygon, height: float = 1.0) -> Polyhedron:
    """Right prism over a convex counter-clockwise polygon in the xy-plane."""
    poly = np.asarray(polygon, dtype=float)
    k = len(poly)
    if k < 3 or height <= 0:
        raise DomainError("a prism needs k >= 3 and positive height")
    bottom = [(x, y, 0.0) for x, y in poly]
    top = [(x, y, height) for x, y in poly]
    faces = [list(range(k))[::-1], list(range(k, 2 * k))]
    faces += [[i, (i + 1) % k, k + (i + 1) % k, k + i] for i in range(k)]
    return build(bottom + top, faces)


def zonohedron(generators, tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    """Minkowski sum of the segments [-g/2, g/2]."""
    gens = np.asarray(generators, dtype=float)
    if len(gens) < 3:
        raise DegenerateHullError("need at least three generators")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if parallel(gens[i], gens[j], tol):
                raise DegenerateHullError(f"generators {i} and {j} are parallel")
    if np.linalg.matrix_rank(gens, tol=1e-9) < 3:
        raise DegenerateHullError("generators are coplanar")
    pts = [np.array(s) @ gens / 2 for s in product((1.0, -1.0), repeat=len(gens))]
    return hull3d(pts, tol)


def tetrahedron() -> Polyhedron:
    """Regular tetrahedron, base triangle in z = 0, apex on +z."""
    base = [(0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.5, sqrt(3) / 2, 0.0)]
    apex = (0.5, sqrt(3) / 6, sqrt(2 / 3))
    return build(base + [apex], [[0, 2, 1], [0, 1, 3], [1, 2, 3], [2, 0, 3]])


def square_pyramid() -> Polyhedron:
    """Johnson J1: unit square base in z = 0 centred on the axis."""
    base = [(-0.5, -0.5, 0.0), (0.5, -0.5, 0.0), (0.5, 0.5, 0.0), (-0.5, 0.5, 0.0)]
    apex = (0.0, 0.0, sqrt(0.5))
    return build(base + [apex], [[3, 2, 1, 0], [0, 1, 4], [1, 2, 4], [2, 3, 4], [3, 0, 4]])


def triangular_cupola() -> Polyhedron:
    """Johnson J3: hexagon base in z = 0, top triangle at height sqrt(2/3)."""
    h = sqrt(2 / 3)
    base = [(x, y, 0.0) for x, y in regular_polygon(6, 1.0)]
    top = [(x, y, h) for x, y in regular_polygon(3, 1 / sqrt(3), pi / 6)]
    return hull3d(base + top)


def icosidodecahedron() -> Polyhedron:
    pts = [(0.0, 0.0, s * PHI) for s in (1, -1)]
    pts += [(0.0, s * PHI, 0.0) for s in (1, -1)] + [(s * PHI, 0.0, 0.0) for s in (1, -1)]
    for a, b, c in product((0.5, -0.5), (PHI / 2, -PHI / 2), (PHI**2 / 2, -PHI**2 / 2)):
        pts += [(a, b, c), (b, c, a), (c, a, b)]
    return hull3d(pts)


def _rotation_to_z(v) -> np.ndarray:
    """Proper rotation taking unit vector v to +z."""
    v = np.asarray(v, dtype=float) / np.linalg.norm(v)
    z = np.array([0.0, 0.0, 1.0])
    c = float(v @ z)
    if c > 1 - 1e-15:
        return np.eye(3)
    if c < -1 + 1e-15:
        return np.diag([1.0, -1.0, -1.0])
    k = np.cross(v, z)
    s = np.linalg.norm(k)
    k = k / s
    K = np.array([[0, -k[2], k[1]], [k[2], 0, -k[0]], [-k[1], k[0], 0]])
    return np.eye(3) + s * K + (1 - c) * K @ K


def pentagonal_rotunda() -> Polyhedron:
    """Johnson J6: half an icosidodecahedron, decagon base in z = 0."""
    ico = icosidodecahedron()
    f = next(i for i, loop in enumerate(ico.faces) if len(loop) == 5)
    R = _rotation_to_z(ico.face_normal(f))
    v = ico.vertices @ R.T
    v[np.abs(v[:, 2]) < 1e-12, 2] = 0.0
    return hull3d(v[v[:, 2] >= -1e-12])


def rhombic_dodecahedron() -> Polyhedron:
    s = 1 / sqrt(3)
    pts = [(x * s, y * s, z * s) for x, y, z in product((1, -1), repeat=3)]
    pts += [tuple(2 * s * e) for e in np.vstack([np.eye(3), -np.eye(3)])]
    return hull3d(pts)


def truncated_octahedron() -> Polyhedron:
    s = 1 / sqrt(2)
    return hull3d([(a * s, b * s, c * s) for a, b, c in _signed_perms((0.0, 1.0, 2.0))])


def truncated_cuboctahedron() -> Polyhedron:
    r2 = sqrt(2)
    return hull3d([(a / 2, b / 2, c / 2) for a, b, c in _signed_perms((1.0, 1 + r2, 1 + 2 * r2))])
