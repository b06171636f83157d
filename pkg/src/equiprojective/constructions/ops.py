"""Half-space cutting and face-to-face gluing of convex polyhedra."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateCutError, DegenerateHullError, GlueError, ReflexEdgeError
from ..numeric import DEFAULT_TOL, Tolerance, hull3d, normalize
from ..polyhedron import Polyhedron


@dataclass(frozen=True)
class CutPlane:
    """Plane ``normal . x = offset``; the kept side is ``normal . x <= offset``."""

    normal: np.ndarray
    offset: float

    @classmethod
    def through(cls, point, normal) -> "CutPlane":
        n = normalize(normal)
        return cls(n, float(n @ np.asarray(point, dtype=float)))

    def __post_init__(self):
        object.__setattr__(self, "normal", normalize(self.normal))
        object.__setattr__(self, "offset", float(self.offset))


def cut(P: Polyhedron, plane: CutPlane, tol: Tolerance = DEFAULT_TOL, allow_contact: bool = False) -> Polyhedron:
    """Intersect P with the kept half-space of ``plane``.

    A plane passing within eps of a vertex is rejected unless ``allow_contact``
    is set; bisections through vertex-to-vertex diagonals need it.
    """
    lim = tol.eps * P.scale
    s = P.vertices @ plane.normal - plane.offset
    if s.max() < -lim:
        return P
    if s.min() > -lim:
        raise DegenerateCutError("cut leaves an empty or flat solid")
    if s.max() <= lim:
        raise DegenerateCutError("cut plane only touches the solid")
    touching = np.abs(s) <= lim
    if touching.any() and not allow_contact:
        raise DegenerateCutError(f"cut plane passes through vertices {list(np.nonzero(touching)[0])}")
    pts = list(P.vertices[s <= lim])
    for a, b in P.edges:
        if (s[a] < -lim and s[b] > lim) or (s[a] > lim and s[b] < -lim):
            t = s[a] / (s[a] - s[b])
            pts.append(P.vertices[a] + t * (P.vertices[b] - P.vertices[a]))
    try:
        return hull3d(np.array(pts), tol)
    except DegenerateHullError as exc:
        raise DegenerateCutError(f"cut result is degenerate: {exc}") from exc


def cut_all(P: Polyhedron, planes, tol: Tolerance = DEFAULT_TOL, allow_contact: bool = False) -> Polyhedron:
    for pl in planes:
        P = cut(P, pl, tol, allow_contact)
    return P


def transformed(P: Polyhedron, R, t=(0.0, 0.0, 0.0), tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    """Rigid image of P; an improper R reverses the face loops to stay outward."""
    from ..polyhedron import build

    R = np.asarray(R, dtype=float)
    verts = P.vertices @ R.T + np.asarray(t, dtype=float)
    faces = P.faces if np.linalg.det(R) > 0 else [f[::-1] for f in P.faces]
    return build(verts, faces, tol)


def _kabsch(src: np.ndarray, dst: np.ndarray, allow_reflection: bool):
    cs, cd = src.mean(axis=0), dst.mean(axis=0)
    H = (src - cs).T @ (dst - cd)
    U, _, Vt = np.linalg.svd(H)
    d = np.sign(np.linalg.det(Vt.T @ U.T))
    if allow_reflection:
        d = 1.0
    D = np.diag([1.0, 1.0, d])
    R = Vt.T @ D @ U.T
    return R, cd - R @ cs


def glue(
    A: Polyhedron,
    B: Polyhedron,
    face_a: int,
    face_b: int,
    shift: int = 0,
    reflect: bool = False,
    tol: Tolerance = DEFAULT_TOL,
) -> Polyhedron:
    """Join B onto A so that ``face_b`` lands on ``face_a`` back to back.

    Vertex ``i`` of face_a's loop meets vertex ``(shift - i) mod m`` of
    face_b's loop (``(shift + i)`` with ``reflect``, which mirrors B).
    Coplanar faces across the seam are merged. Raises
    :class:`ReflexEdgeError` if the union is not convex.
    """
    la, lb = A.faces[face_a], B.faces[face_b]
    m = len(la)
    if len(lb) != m:
        raise GlueError(f"faces have {m} and {len(lb)} vertices")
    sign = 1 if reflect else -1
    src_idx = [lb[(shift + sign * i) % m] for i in range(m)]
    src = B.vertices[src_idx]
    dst = A.vertices[list(la)]
    # anchor the normals so the solids end up on opposite sides
    src_aug = np.vstack([src, src.mean(axis=0) + B.face_normal(face_b)])
    dst_aug = np.vstack([dst, dst.mean(axis=0) - A.face_normal(face_a)])
    R, t = _kabsch(src_aug, dst_aug, reflect)
    err = np.abs(src_aug @ R.T + t - dst_aug).max()
    if err > tol.eps * max(A.scale, B.scale) * 1e3:
        raise GlueError(f"faces are not congruent under the correspondence (residual {err:.3g})")
    if reflect and np.linalg.det(R) > 0:
        raise GlueError("reflected correspondence admits a proper rotation; pass reflect=False")
    Bt = transformed(B, R, t, tol)
    _check_seam(A, Bt, face_a, tol)
    merged = hull3d(np.vstack([A.vertices, Bt.vertices]), tol)
    if abs(merged.volume - A.volume - Bt.volume) > 1e3 * tol.eps * merged.volume:
        raise ReflexEdgeError("glued union is not convex")
    return merged


def _check_seam(A: Polyhedron, Bt: Polyhedron, face_a: int, tol: Tolerance) -> None:
    """Every B vertex must lie inside each A face plane adjacent to the seam."""
    lim = 1e3 * tol.eps * max(A.scale, Bt.scale)
    for e in A.face_edges(face_a):
        f1, f2 = A.edges[e]
        other = f2 if f1 == face_a else f1
        n, off = A.normals[other], A.offsets[other]
        if (Bt.vertices @ n - off).max() > lim:
            raise ReflexEdgeError(f"reflex dihedral along seam edge {e} of the first solid", edge=e)
