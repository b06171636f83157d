"""Equitruncations: sequences of planar cuts that leave every face compensated.

Each generator works in two steps. It first lays out labelled cut planes,
then applies them. The labels let callers find the faces a given cut created.
"""

from __future__ import annotations

from math import sqrt

import numpy as np

from ..errors import DomainError
from ..numeric import DEFAULT_TOL, Tolerance, normalize
from ..polyhedron import Polyhedron
from .ops import CutPlane, cut_all
from .solids import pentagonal_rotunda, square_pyramid, tetrahedron, triangular_cupola


def _check_fraction(name: str, value: float) -> None:
    if not 0.0 < value < 1.0:
        raise DomainError(f"{name} must lie strictly between 0 and 1, got {value}")


def _apex_frame(P: Polyhedron, apex: int, base: list[int]):
    A = P.vertices[apex]
    B = P.vertices[base]
    nb = normalize(np.cross(B[1] - B[0], B[2] - B[0]))
    if nb @ (A - B[0]) < 0:
        nb = -nb
    return A, B, nb, float(nb @ (A - B[0]))


def _locate_apex(P: Polyhedron, base_size: int) -> tuple[int, list[int]]:
    """Apex is the vertex off the unique ``base_size``-gon; base listed in loop order."""
    base_faces = [f for f in P.faces if len(f) == base_size]
    if base_size == 3:
        # any face of a tetrahedron can serve; use the first one
        base_faces = base_faces[:1]
    if len(base_faces) != 1:
        raise DomainError(f"expected a single {base_size}-gonal base face")
    base = list(base_faces[0])
    rest = [v for v in range(P.V) if v not in base]
    if len(rest) != 1 or len(base) + 1 != P.V:
        raise DomainError("solid is not a pyramid over the chosen base")
    return rest[0], base


def tetrahedron_planes(P: Polyhedron, frac: float = 0.25, top: float = 0.75, axis=None) -> dict[str, CutPlane]:
    """Top cut plus three side-cut pairs for a tetrahedron.

    Lines ``l_i`` run along ``axis`` through the points at ``frac`` of the way
    from each base vertex to the apex. The pair through ``l_i`` and ``l_j`` is
    parallel to the apex edge over the third base vertex.
    """
    _check_fraction("frac", frac)
    _check_fraction("top", top)
    apex, base = _locate_apex(P, 3)
    A, B, nb, height = _apex_frame(P, apex, base)
    if axis is None:
        axis = A - B.mean(axis=0)
    axis = normalize(axis)
    if axis @ nb <= 0:
        raise DomainError("axis must point from the base towards the apex")
    planes = {"top": CutPlane.through(B[0] + top * height * nb, nb)}
    feet = [B[i] + frac * (A - B[i]) for i in range(3)]
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            k = 3 - i - j
            n = np.cross(axis, A - B[k])
            if n @ (B[i] - feet[i]) < 0:
                n = -n
            planes[f"side_{i}{j}"] = CutPlane.through(feet[i], n)
    return planes


def equitruncated_tetrahedron(
    frac: float = 0.25,
    top: float = 0.75,
    P: Polyhedron | None = None,
    axis=None,
    tol: Tolerance = DEFAULT_TOL,
) -> Polyhedron:
    """Equitruncate ``P`` (a regular tetrahedron by default)."""
    P = tetrahedron() if P is None else P
    planes = tetrahedron_planes(P, frac, top, axis)
    return cut_all(P, planes.values(), tol, allow_contact=True)


def pyramid_planes(P: Polyhedron, frac: float = 0.25, top: float = 0.75) -> dict[str, CutPlane]:
    # Opposite apex edges form two planar paths; each side cut is parallel to the other path's plane.
    _check_fraction("frac", frac)
    _check_fraction("top", top)
    apex, base = _locate_apex(P, 4)
    A, B, nb, height = _apex_frame(P, apex, base)
    planes = {"top": CutPlane.through(B[0] + top * height * nb, nb)}
    for i in range(4):
        n = np.cross(B[(i + 1) % 4] - A, B[(i + 3) % 4] - A)
        if n @ (B[i] - A) < 0:
            n = -n
        planes[f"side_{i}"] = CutPlane.through(B[i] + frac * (A - B[i]), n)
    return planes


def equitruncated_pyramid(
    frac: float = 0.25,
    top: float = 0.75,
    P: Polyhedron | None = None,
    tol: Tolerance = DEFAULT_TOL,
) -> Polyhedron:
    """Equitruncate a quadrilateral pyramid (the unit square pyramid by default)."""
    P = square_pyramid() if P is None else P
    return cut_all(P, pyramid_planes(P, frac, top).values(), tol, allow_contact=True)


CUPOLA_HEIGHT = sqrt(2.0 / 3.0)


def cupola_planes(d1: float = 0.2, d2: float = 0.15, d3: float = 0.1, d4: float = 0.25) -> dict[str, CutPlane]:
    """Cut planes for the canonical cupola, each given by its depth below the touched feature.

    ``cut1`` is parallel to the lateral triangle over the base edge nearest +y.
    ``cut2`` is a pair of planes perpendicular to the base and to that triangle.
    ``cut3`` flattens the top. ``cut4`` removes the top vertex on the -y side.
    """
    for name, d in (("d1", d1), ("d2", d2), ("d3", d3), ("d4", d4)):
        if d <= 0:
            raise DomainError(f"{name} must be positive")
    h = CUPOLA_HEIGHT
    n1 = normalize((0.0, -h, 1.0 / (2.0 * sqrt(3.0))))
    h1 = np.array([0.5, sqrt(3.0) / 2.0, 0.0])
    n4 = normalize((0.0, -h, 2.0 / sqrt(3.0)))
    t2 = np.array([0.0, -1.0 / sqrt(3.0), h])
    return {
        "cut1": CutPlane(-n1, -n1 @ h1 - d1),
        "cut2+": CutPlane((1.0, 0.0, 0.0), 1.0 - d2),
        "cut2-": CutPlane((-1.0, 0.0, 0.0), 1.0 - d2),
        "cut3": CutPlane((0.0, 0.0, 1.0), h - d3),
        "cut4": CutPlane(n4, n4 @ t2 - d4),
    }


def equitruncated_triangular_cupola(
    d1: float = 0.2, d2: float = 0.15, d3: float = 0.1, d4: float = 0.25, tol: Tolerance = DEFAULT_TOL
) -> Polyhedron:
    return cut_all(triangular_cupola(), cupola_planes(d1, d2, d3, d4).values(), tol, allow_contact=True)


def _rotunda_layout(P: Polyhedron):
    V = P.vertices
    base = [i for i in range(P.V) if abs(V[i, 2]) < 1e-9]
    base.sort(key=lambda i: np.arctan2(V[i, 1], V[i, 0]))
    upper = [i for i in range(P.V) if i not in base]
    return base, upper


def _side_face(P: Polyhedron, a: int, b: int) -> int:
    return next(i for i, f in enumerate(P.faces) if len(f) != 10 and a in f and b in f)


def rotunda_planes(
    variant: int = 1,
    j0: int = 0,
    d1: float = 0.1,
    d2: float = 0.12,
    d3: float = 0.12,
    d4: float = 0.1,
) -> dict[str, CutPlane]:
    """Labelled cut planes for the canonical rotunda.

    Base vertices ``b0..b9`` are sorted by angle. Around the base, edge
    ``b_j b_{j+1}`` and the parallel edge ``b_{j+5} b_{j+6}`` carry a pentagon
    and a triangle on opposite sides. ``pair(j)`` cuts parallel to both of them
    from the inside, turning each into a quadrilateral. ``cut1(j)`` is a
    parallel pair perpendicular to the base, shaving ``b_j`` and ``b_{j+5}``.
    Variant 1 uses pair(j0), pair(j0+2), cut1(j0+4). Variant 2 uses pair(j0),
    cut1(j0+2), cut1(j0+3), cut1(j0+4).
    """
    if variant not in (1, 2):
        raise DomainError("rotunda variant must be 1 or 2")
    for name, d in (("d1", d1), ("d2", d2), ("d3", d3), ("d4", d4)):
        if d <= 0:
            raise DomainError(f"{name} must be positive")
    P = pentagonal_rotunda()
    V = P.vertices
    base, upper = _rotunda_layout(P)
    planes: dict[str, CutPlane] = {}
    for u in upper:
        n = V[u] / np.linalg.norm(V[u])
        planes[f"cut4_{u}"] = CutPlane(n, n @ V[u] - d4)

    def pair(j: int, tag: str) -> None:
        fa = _side_face(P, base[j % 10], base[(j + 1) % 10])
        fb = _side_face(P, base[(j + 5) % 10], base[(j + 6) % 10])
        if len(P.faces[fa]) == 3:
            fa, fb = fb, fa
        n_p, n_t = P.normals[fa], P.normals[fb]
        # cut2 is parallel to the pentagon and slices the triangle; cut3 the reverse
        planes[f"cut2_{tag}"] = CutPlane(-n_p, np.max(-V @ n_p) - d2)
        planes[f"cut3_{tag}"] = CutPlane(-n_t, np.max(-V @ n_t) - d3)

    def cut1(j: int, tag: str) -> None:
        b, b2 = V[base[j % 10]], V[base[(j + 5) % 10]]
        n = normalize(b - b2)
        planes[f"cut1_{tag}+"] = CutPlane(n, n @ b - d1)
        planes[f"cut1_{tag}-"] = CutPlane(-n, -n @ b2 - d1)

    pair(j0, "a")
    if variant == 1:
        pair(j0 + 2, "b")
    else:
        cut1(j0 + 2, "b")
        cut1(j0 + 3, "c")
    cut1(j0 + 4, "t")
    return planes


def equitruncated_pentagonal_rotunda(
    variant: int = 1,
    j0: int = 0,
    d1: float = 0.1,
    d2: float = 0.12,
    d3: float = 0.12,
    d4: float = 0.1,
    tol: Tolerance = DEFAULT_TOL,
) -> Polyhedron:
    planes = rotunda_planes(variant, j0, d1, d2, d3, d4)
    return cut_all(pentagonal_rotunda(), planes.values(), tol, allow_contact=True)


def faces_on_planes(P: Polyhedron, planes: dict[str, CutPlane], tol: Tolerance = DEFAULT_TOL) -> dict[str, int]:
    """Map each plane label to the face of ``P`` lying in that plane, if any."""
    lim = 1e3 * tol.eps * P.scale
    found = {}
    for label, pl in planes.items():
        for f in range(P.F):
            if np.linalg.norm(P.normals[f] - pl.normal) < 1e-6 and abs(P.offsets[f] - pl.offset) < lim:
                found[label] = f
                break
    return found
