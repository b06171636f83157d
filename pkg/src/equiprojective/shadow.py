"""Shadow oracle: silhouette sizes of orthogonal projections.

Two independent counts are kept: the number of edges whose incident faces
face opposite ways relative to the viewing direction, and the number of
edges of the 2D hull of the projected vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateDirectionError, DomainError, InconsistentGeometryError, PathologicalToleranceError
from .numeric import DEFAULT_TOL, Tolerance, hull2d, normalize, plane_basis
from .polyhedron import Edge, Polyhedron

ANGULAR_EPS = 1e-7
DEFAULT_SAMPLES = 1000


def degenerate_faces(P: Polyhedron, d, angular_eps: float = ANGULAR_EPS) -> list[int]:
    dh = normalize(d)
    return [int(i) for i in np.nonzero(np.abs(P.normals @ dh) < angular_eps)[0]]


def is_degenerate_direction(P: Polyhedron, d, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff d is parallel to the plane of some face of P."""
    return bool(degenerate_faces(P, d))


def _require_generic(P, d):
    bad = degenerate_faces(P, d)
    if bad:
        raise DegenerateDirectionError(f"direction {tuple(np.round(d, 12))} is parallel to faces {bad}", bad)


def silhouette_edges(P: Polyhedron, d) -> list[Edge]:
    """Edges separating faces that see d from faces that do not."""
    _require_generic(P, d)
    s = P.normals @ normalize(d)
    return [e for e, (f1, f2) in P.edges.items() if s[f1] * s[f2] < 0]


def shadow_polygon(P: Polyhedron, d, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Counter-clockwise shadow polygon in a basis of the plane orthogonal to d."""
    _require_generic(P, d)
    u, w = plane_basis(d)
    return hull2d(np.column_stack([P.vertices @ u, P.vertices @ w]), tol)


def silhouette_count(P: Polyhedron, d, tol: Tolerance = DEFAULT_TOL) -> int:
    by_sign = len(silhouette_edges(P, d))
    by_hull = len(shadow_polygon(P, d, tol))
    if by_sign != by_hull:
        raise InconsistentGeometryError(
            f"silhouette counts disagree along {tuple(d)}: {by_sign} edges vs {by_hull}-gon"
        )
    return by_sign


def _draw(n: int, seed: int, P: Polyhedron) -> tuple[np.ndarray, int]:
    """n seeded unit vectors non-degenerate for P, plus the number rejected."""
    if n < 1:
        raise DomainError("need at least one sample")
    rng = np.random.default_rng(seed)
    kept: list[np.ndarray] = []
    have = tries = 0
    while have < n:
        g = rng.standard_normal((n - have, 3))
        tries += len(g)
        norms = np.linalg.norm(g, axis=1)
        g = g[norms > 1e-12] / norms[norms > 1e-12, None]
        ok = g[np.all(np.abs(g @ P.normals.T) >= ANGULAR_EPS, axis=1)]
        kept.append(ok)
        have += len(ok)
        if tries >= 100 and have < tries / 100:
            raise PathologicalToleranceError(f"rejected {tries - have} of {tries} directions")
    return np.vstack(kept)[:n], tries - n


def sample_directions(n: int, seed: int, P: Polyhedron, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """n seeded uniform unit vectors (normalized Gaussian triples), resampling degenerate ones."""
    return _draw(n, seed, P)[0]


def sign_change_counts(P: Polyhedron, directions) -> np.ndarray:
    """Silhouette edge count for each row of ``directions`` by face-normal signs."""
    D = np.atleast_2d(np.asarray(directions, dtype=float))
    S = P.normals @ D.T
    ends = np.array(list(P.edges.values()))
    return np.count_nonzero(S[ends[:, 0]] * S[ends[:, 1]] < 0, axis=0)


def hull_counts(P: Polyhedron, directions, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Shadow polygon edge count for each row of ``directions`` via 2D hulls."""
    D = np.atleast_2d(np.asarray(directions, dtype=float))
    D = D / np.linalg.norm(D, axis=1, keepdims=True)
    helper = np.where(np.abs(D[:, :1]) < 0.9, [[1.0, 0.0, 0.0]], [[0.0, 1.0, 0.0]])
    U = np.cross(helper, D)
    U /= np.linalg.norm(U, axis=1, keepdims=True)
    W = np.cross(D, U)
    pu, pw = P.vertices @ U.T, P.vertices @ W.T
    return np.array([len(hull2d(np.column_stack([pu[:, i], pw[:, i]]), tol)) for i in range(len(D))])


@dataclass
class ShadowReport:
    samples: int
    per_direction: list[tuple[np.ndarray, int]] = field(repr=False)
    k: int | None
    witness: tuple[tuple[np.ndarray, int], tuple[np.ndarray, int]] | None = None
    skipped_degenerate: int = 0

    @property
    def constant(self) -> bool:
        return self.k is not None

    def to_dict(self) -> dict:
        out: dict = {"samples": self.samples, "skipped_degenerate": self.skipped_degenerate}
        if self.constant:
            out["k"] = self.k
        else:
            out["witness"] = [{"direction": [float(x) for x in d], "count": int(c)} for d, c in self.witness]
        return out


def measure_k(
    P: Polyhedron,
    n: int = DEFAULT_SAMPLES,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
    crosscheck: bool = True,
) -> ShadowReport:
    """Estimate k from n seeded projections; report a witness pair if counts vary.

    With ``crosscheck`` every sign-change count is compared against the 2D hull
    of the projected vertices, raising on any disagreement.
    """
    dirs, skipped = _draw(n, seed, P)
    counts = sign_change_counts(P, dirs)
    if crosscheck:
        hulls = hull_counts(P, dirs, tol)
        bad = np.nonzero(hulls != counts)[0]
        if len(bad):
            i = int(bad[0])
            raise InconsistentGeometryError(
                f"silhouette counts disagree along {tuple(dirs[i])}: {counts[i]} edges vs {hulls[i]}-gon"
            )
    per = [(d, int(c)) for d, c in zip(dirs, counts)]
    differ = np.nonzero(counts != counts[0])[0]
    if len(differ):
        return ShadowReport(n, per, None, (per[0], per[int(differ[0])]), skipped)
    return ShadowReport(n, per, int(counts[0]), None, skipped)
