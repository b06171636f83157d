"""Closed convex polyhedra stored as vertex coordinates plus face loops.

Face loops are counter-clockwise as seen from outside. The edge table maps
each unordered vertex pair ``(a, b)`` with ``a < b`` to its two faces, the
first being the face that traverses the edge ``a -> b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import (
    MeshError,
    NonConvexFaceError,
    NonConvexSolidError,
    NonPlanarFaceError,
    OpenMeshError,
    OrientationError,
)
from .numeric import DEFAULT_TOL, Tolerance, normalize, parallel, plane_basis

Edge = tuple[int, int]


def edge_key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def newell_normal(pts: np.ndarray) -> np.ndarray:
    nxt = np.roll(pts, -1, axis=0)
    return np.array(
        [
            np.sum((pts[:, 1] - nxt[:, 1]) * (pts[:, 2] + nxt[:, 2])),
            np.sum((pts[:, 2] - nxt[:, 2]) * (pts[:, 0] + nxt[:, 0])),
            np.sum((pts[:, 0] - nxt[:, 0]) * (pts[:, 1] + nxt[:, 1])),
        ]
    )


@dataclass(frozen=True, eq=False)
class Polyhedron:
    vertices: np.ndarray
    faces: tuple[tuple[int, ...], ...]
    edges: dict[Edge, tuple[int, int]] = field(repr=False)

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return len(self.edges)

    @property
    def F(self) -> int:
        return len(self.faces)

    @cached_property
    def normals(self) -> np.ndarray:
        return np.array([normalize(newell_normal(self.vertices[list(f)])) for f in self.faces])

    @cached_property
    def offsets(self) -> np.ndarray:
        return np.array([self.normals[i] @ self.vertices[f[0]] for i, f in enumerate(self.faces)])

    @cached_property
    def centroid(self) -> np.ndarray:
        return self.vertices.mean(axis=0)

    @cached_property
    def scale(self) -> float:
        return max(1.0, float(np.max(np.linalg.norm(self.vertices - self.centroid, axis=1))))

    @cached_property
    def volume(self) -> float:
        vol = 0.0
        for f in self.faces:
            p0 = self.vertices[f[0]]
            for a, b in zip(f[1:-1], f[2:]):
                vol += np.dot(p0, np.cross(self.vertices[a], self.vertices[b]))
        return vol / 6.0

    def face_normal(self, f: int) -> np.ndarray:
        """Unit outward normal of face ``f``."""
        return self.normals[f]

    def face_sizes(self) -> list[int]:
        return [len(f) for f in self.faces]

    def face_edges(self, f: int) -> list[Edge]:
        loop = self.faces[f]
        return [edge_key(a, b) for a, b in zip(loop, loop[1:] + loop[:1])]

    def parallel_face_pairs(self, tol: Tolerance = DEFAULT_TOL) -> set[tuple[int, int]]:
        """Unordered pairs of distinct faces lying in distinct parallel planes."""
        out = set()
        for i, j in combinations(range(self.F), 2):
            if parallel(self.normals[i], self.normals[j], tol):
                same = self.normals[i] @ self.normals[j] > 0 and abs(self.offsets[i] - self.offsets[j]) <= tol.eps * self.scale
                if not same:
                    out.add((i, j))
        return out

    def same_combinatorics(self, other: "Polyhedron") -> bool:
        return self.faces == other.faces and self.V == other.V


def build(vertices, face_loops, tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    """Validate a mesh and return it as a Polyhedron.

    Rejects rather than repairs; each failed invariant raises its own
    :class:`MeshError` subclass.
    """
    verts = np.array(vertices, dtype=float).reshape(-1, 3)
    if not np.all(np.isfinite(verts)):
        raise MeshError("non-finite vertex coordinates")
    verts.setflags(write=False)
    faces = tuple(tuple(int(i) for i in f) for f in face_loops)
    nv = len(verts)
    for fi, f in enumerate(faces):
        if len(f) < 3:
            raise MeshError(f"face {fi} has fewer than 3 vertices")
        if len(set(f)) != len(f):
            raise MeshError(f"face {fi} repeats a vertex")
        if any(i < 0 or i >= nv for i in f):
            raise MeshError(f"face {fi} indexes a missing vertex")

    directed: dict[Edge, int] = {}
    incident: dict[Edge, list[int]] = {}
    for fi, f in enumerate(faces):
        for a, b in zip(f, f[1:] + f[:1]):
            incident.setdefault(edge_key(a, b), []).append(fi)
            if (a, b) in directed:
                raise OrientationError(
                    f"edge {a}->{b} traversed in the same sense by faces {directed[(a, b)]} and {fi}"
                )
            directed[(a, b)] = fi
    for e, fs in incident.items():
        if len(fs) != 2:
            raise OpenMeshError(f"edge {e} has {len(fs)} incident faces")
    used = {i for f in faces for i in f}
    if len(used) != nv:
        raise MeshError(f"{nv - len(used)} vertices are not on any face")
    edges = {e: (directed[e], directed[(e[1], e[0])]) for e in incident}

    centroid = verts.mean(axis=0)
    scale = max(1.0, float(np.max(np.linalg.norm(verts - centroid, axis=1))))
    lim = tol.eps * scale
    normals = []
    for fi, f in enumerate(faces):
        pts = verts[list(f)]
        nn = newell_normal(pts)
        if np.linalg.norm(nn) <= lim * scale:
            raise NonConvexFaceError(f"face {fi} has zero area")
        n = nn / np.linalg.norm(nn)
        dev = np.abs((pts - pts.mean(axis=0)) @ n)
        if dev.max() > lim:
            raise NonPlanarFaceError(f"face {fi} deviates from its plane by {dev.max():.3g}")
        u, w = plane_basis(n)
        p2 = np.column_stack([pts @ u, pts @ w])
        prv, nxt = np.roll(p2, 1, axis=0), np.roll(p2, -1, axis=0)
        turn = (p2[:, 0] - prv[:, 0]) * (nxt[:, 1] - p2[:, 1]) - (p2[:, 1] - prv[:, 1]) * (nxt[:, 0] - p2[:, 0])
        if turn.min() <= lim * scale:
            raise NonConvexFaceError(f"face {fi} is not strictly convex")
        normals.append(n)

    for fi, f in enumerate(faces):
        n = normals[fi]
        side = (verts - verts[f[0]]) @ n
        if side.max() > lim:
            k = int(np.argmax(side))
            raise NonConvexSolidError(f"vertex {k} lies {side.max():.3g} outside the plane of face {fi}")
    for fi, f in enumerate(faces):
        if normals[fi] @ (verts[list(f)].mean(axis=0) - centroid) <= 0:
            raise OrientationError(f"face {fi} normal points inward")
    if nv - len(edges) + len(faces) != 2:
        raise MeshError("Euler characteristic is not 2")
    return Polyhedron(verts, faces, edges)
