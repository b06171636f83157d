"""Tolerant vector predicates and convex hulls in two and three dimensions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .errors import DegenerateHullError, DomainError

EPS = 1e-9


@dataclass(frozen=True)
class Tolerance:
    """Absolute tolerance applied to normalized quantities."""

    eps: float = EPS

    def __post_init__(self):
        if not 0.0 < self.eps < 1e-3:
            raise DomainError(f"tolerance must satisfy 0 < eps < 1e-3, got {self.eps}")


DEFAULT_TOL = Tolerance()


def vec(x) -> np.ndarray:
    v = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(v)):
        raise DomainError(f"non-finite coordinates: {x!r}")
    return v


def normalize(v) -> np.ndarray:
    v = vec(v)
    n = np.linalg.norm(v)
    if n == 0.0:
        raise DomainError("cannot normalize the zero vector")
    return v / n


def parallel(u, v, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff u and v are parallel or antiparallel."""
    uh, vh = normalize(u), normalize(v)
    return bool(np.linalg.norm(np.cross(uh, vh)) < tol.eps)


def opposite_direction(u, v, tol: Tolerance = DEFAULT_TOL) -> bool:
    """For parallel u, v: True iff they point opposite ways."""
    if not parallel(u, v, tol):
        raise DomainError("opposite_direction needs parallel vectors")
    return bool(np.dot(normalize(u), normalize(v)) < 0.0)


def _cross2(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull2d(points, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Counter-clockwise convex hull with collinear boundary points dropped.

    Monotone chain with exact float orientation, then a pass that removes
    corners whose turn area is below ``eps`` times the squared extent.
    Applying the tolerance inside the chain lets near-ties in the sort
    order swallow genuine corners.
    """
    pts = np.asarray(points, dtype=float)
    if len(pts) < 3:
        raise DegenerateHullError("hull2d needs at least 3 points")
    scale = float(np.max(np.ptp(pts, axis=0)))
    if scale == 0.0:
        raise DegenerateHullError("all points coincide")
    thresh = tol.eps * scale * scale
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    srt = [tuple(p) for p in pts[order]]

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross2(out[-2], out[-1], p) <= 0.0:
                out.pop()
            out.append(p)
        return out

    hull = chain(srt)[:-1] + chain(reversed(srt))[:-1]
    changed = True
    while changed and len(hull) >= 3:
        changed = False
        for i in range(len(hull)):
            if _cross2(hull[i - 1], hull[i], hull[(i + 1) % len(hull)]) <= thresh:
                del hull[i]
                changed = True
                break
    if len(hull) < 3:
        raise DegenerateHullError("points are collinear")
    return np.array(hull)


def polygon_area2(poly) -> float:
    """Twice the signed area of a 2D polygon."""
    p = np.asarray(poly, dtype=float)
    q = np.roll(p, -1, axis=0)
    return float(np.sum(p[:, 0] * q[:, 1] - p[:, 1] * q[:, 0]))


def plane_basis(normal):
    """Two unit vectors (u, w) with (u, w, normal) right-handed."""
    n = normalize(normal)
    a = np.array([1.0, 0.0, 0.0]) if abs(n[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    u = normalize(np.cross(a, n))
    w = np.cross(n, u)
    return u, w


def hull3d(points, tol: Tolerance = DEFAULT_TOL):
    """Convex hull as a validated Polyhedron with coplanar facets merged.

    Qhull supplies candidate supporting planes; each distinct plane becomes a
    face whose loop is the 2D hull of every input point on it, so flat faces
    are never triangulated and points interior to faces or edges are dropped.
    """
    from .polyhedron import build

    pts = np.asarray(points, dtype=float)
    if len(pts) < 4:
        raise DegenerateHullError("hull3d needs at least 4 points")
    scale = float(np.max(np.linalg.norm(pts - pts.mean(axis=0), axis=1)))
    if scale == 0.0:
        raise DegenerateHullError("all points coincide")
    try:
        qh = ConvexHull(pts)
    except QhullError as exc:
        raise DegenerateHullError("points are coplanar") from exc
    if qh.volume <= tol.eps * scale**3:
        raise DegenerateHullError("points are coplanar")

    # distinct supporting planes
    planes: list[np.ndarray] = []
    for eq in qh.equations:
        n, off = eq[:3], -eq[3]
        if not any(np.linalg.norm(n - m[:3]) < 1e-6 and abs(off - m[3]) < 1e-6 * scale for m in planes):
            planes.append(np.append(n, off))

    # weld coincident input points
    uniq: list[np.ndarray] = []
    for p in pts:
        if not any(np.linalg.norm(p - q) <= tol.eps * max(scale, 1.0) for q in uniq):
            uniq.append(p)
    upts = np.array(uniq)

    # a hull corner lies on at least three supporting planes; testing this once
    # per point keeps neighbouring face loops consistent along shared edges
    near = 1e3 * tol.eps * max(scale, 1.0)
    normals = np.array([normalize(pl[:3]) for pl in planes])
    offsets = np.array([pl[3] for pl in planes])
    on_plane = np.abs(upts @ normals.T - offsets) <= near
    corner = on_plane.sum(axis=1) >= 3

    face_pts = []
    for j, n in enumerate(normals):
        on = np.nonzero(on_plane[:, j] & corner)[0]
        if len(on) < 3:
            continue
        u, w = plane_basis(n)
        rel = upts[on] - upts[on].mean(axis=0)
        order = np.argsort(np.arctan2(rel @ w, rel @ u))
        face_pts.append([int(on[k]) for k in order])

    used = sorted({i for f in face_pts for i in f})
    remap = {old: new for new, old in enumerate(used)}
    verts = upts[used]
    faces = [[remap[i] for i in f] for f in face_pts]
    return build(verts, faces, tol)
