"""Bisect a zonohedral solid, regularize the cut face, and glue two halves back with a turn."""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from ..errors import DomainError
from ..numeric import DEFAULT_TOL, EPS, Tolerance, normalize
from ..polyhedron import Polyhedron, edge_key
from .ops import CutPlane, cut, cut_all, glue
from .solids import rhombic_dodecahedron, truncated_cuboctahedron, truncated_octahedron

Pairing = list[tuple[int, int]]


@dataclass(frozen=True)
class GlueSpec:
    """Face ids and the cyclic vertex alignment used by :func:`glue`."""

    face_a: int
    face_b: int
    shift: int = 0
    reflect: bool = False


@dataclass(frozen=True)
class Half:
    solid: Polyhedron
    base: int

    @property
    def loop(self) -> tuple[int, ...]:
        return tuple(self.solid.faces[self.base])

    def side_sizes(self) -> list[int]:
        """Vertex count of the side face across each base edge ``loop[i] loop[i+1]``."""
        P, L = self.solid, self.loop
        out = []
        for i in range(len(L)):
            f1, f2 = P.edges[edge_key(L[i], L[(i + 1) % len(L)])]
            out.append(len(P.faces[f2 if f1 == self.base else f1]))
        return out

    def edge_lengths(self) -> np.ndarray:
        V = self.solid.vertices[list(self.loop)]
        return np.linalg.norm(V - np.roll(V, -1, axis=0), axis=1)


def half_space_piece(P: Polyhedron, normal, offset: float, tol: Tolerance = DEFAULT_TOL) -> Half:
    """Part of P with ``normal . x >= offset``; its new face is the base."""
    n = normalize(normal)
    H = cut(P, CutPlane(-n, -offset), tol, allow_contact=True)
    return Half(H, int(np.argmax(H.normals @ -n)))


def pairing(sides: list[int], shift: int, reflect: bool) -> Pairing:
    """Side-face sizes meeting across each seam edge under a glue correspondence.

    Vertex i of A meets vertex ``shift - i`` of B (``shift + i`` if reflected),
    so A's edge i meets B's edge ``shift - i - 1`` (``shift + i``).
    """
    m = len(sides)
    return [(sides[i], sides[(shift + i) % m if reflect else (shift - i - 1) % m]) for i in range(m)]


def pin_correspondence(half: Half, accept: Callable[[Pairing], bool], tol: Tolerance = DEFAULT_TOL) -> GlueSpec:
    """First correspondence whose side pairing passes ``accept``, preferring congruent ones.

    Order is shift ascending with the proper alignment before the mirrored one.
    If no accepted alignment is congruent, the first accepted one is returned and
    the subsequent glue reports the mismatch.
    """
    sides = half.side_sizes()
    candidates = [
        GlueSpec(half.base, half.base, s, r)
        for s in range(len(sides))
        for r in (False, True)
        if accept(pairing(sides, s, r))
    ]
    if not candidates:
        raise DomainError("no glue correspondence matches the requested face pattern")
    for spec in candidates:
        if _congruent(half, spec, tol):
            return spec
    return candidates[0]


def _congruent(half: Half, spec: GlueSpec, tol: Tolerance) -> bool:
    # compare the cyclic sequence of edge lengths and corner angles
    V = half.solid.vertices[list(half.loop)]
    m = len(V)
    sign = 1 if spec.reflect else -1
    W = V[[(spec.shift + sign * i) % m for i in range(m)]]
    dv = np.linalg.norm(V[:, None] - V[None], axis=2)
    dw = np.linalg.norm(W[:, None] - W[None], axis=2)
    return bool(np.abs(dv - dw).max() <= 1e3 * tol.eps * half.solid.scale)


def join(A: Polyhedron, B: Polyhedron, spec: GlueSpec, tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    return glue(A, B, spec.face_a, spec.face_b, spec.shift, spec.reflect, tol)


def _solve(fn: Callable[[float], float], lo: float, hi: float) -> float:
    return brentq(fn, lo, hi, xtol=EPS, rtol=4 * np.finfo(float).eps)


def _length_gap(half: Half) -> float:
    """Mean base-edge length next to the smaller side faces minus the rest."""
    sides = np.array(half.side_sizes())
    lengths = half.edge_lengths()
    small = sides == sides.min()
    return float(lengths[small].mean() - lengths[~small].mean())


def equilateral_half(P: Polyhedron, normal, lo: float, hi: float, tol: Tolerance = DEFAULT_TOL) -> tuple[Half, float]:
    """Slide a cut parallel to the bisecting plane until the base is equilateral."""
    c = _solve(lambda t: _length_gap(half_space_piece(P, normal, t, tol)), lo, hi)
    return half_space_piece(P, normal, c, tol), c


def _triangles_meet_rhombi(pairs: Pairing) -> bool:
    return all(b != 3 for a, b in pairs if a == 3)


def _triangles_meet_hexagons(pairs: Pairing) -> bool:
    return all(b == 6 for a, b in pairs if a == 3)


def _squares_meet_hexagons(pairs: Pairing) -> bool:
    return all(b == 6 for a, b in pairs if a == 4)


def _octagons_meet_octagons(pairs: Pairing) -> bool:
    return all(b == 8 for a, b in pairs if a == 8)


def _wide_faces_meet_triangles(pairs: Pairing) -> bool:
    return all(b == 3 for a, b in pairs if a in (6, 8))


def rd_half(tol: Tolerance = DEFAULT_TOL) -> tuple[Half, float]:
    # x = y runs through the short diagonals of two opposite rhombi
    n = np.array([1.0, -1.0, 0.0])
    return equilateral_half(rhombic_dodecahedron(), n, 1e-3, 0.3, tol)


def to_half(tol: Tolerance = DEFAULT_TOL) -> tuple[Half, float]:
    # z = 0 runs through the diagonals of the four equatorial squares
    return equilateral_half(truncated_octahedron(), (0.0, 0.0, 1.0), 1e-3, 0.5, tol)


def tc_cap(tol: Tolerance = DEFAULT_TOL) -> tuple[Half, float]:
    """Cap of the truncated cuboctahedron beyond x = 1/2, regularized.

    The plane x = 1/2 holds one edge of each of the four squares around the
    +x octagon. A parallel cut then equalizes the octagonal base.
    """
    return equilateral_half(truncated_cuboctahedron(), (1.0, 0.0, 0.0), 0.5 + 1e-3, 1.2, tol)


TC_RECTANGLE_OFFSET = (3.0 + 3.0 * sqrt(2.0)) / 4.0


def tc_rectangle_half(offset: float = TC_RECTANGLE_OFFSET, tol: Tolerance = DEFAULT_TOL) -> Half:
    """Half of the octagon-shaved truncated cuboctahedron on the +(1,1,1) side.

    Cutting every octagon back to ``offset`` turns the six squares parallel to
    (1,1,1) into rectangles. The default offset is the one at which the central
    plane normal to (1,1,1) runs through a diagonal of each rectangle.
    """
    planes = [CutPlane(s * np.eye(3)[i], offset) for i in range(3) for s in (1.0, -1.0)]
    shaved = cut_all(truncated_cuboctahedron(), planes, tol)
    return half_space_piece(shaved, (1.0, 1.0, 1.0), 0.0, tol)


_RULES = {
    "RD": _triangles_meet_rhombi,
    "TO": _triangles_meet_hexagons,
    "TC-I": _squares_meet_hexagons,
    "TC-II": _octagons_meet_octagons,
    "TC-III": _wide_faces_meet_triangles,
}

VARIANTS = tuple(_RULES)


def reglue_half(variant: str, tol: Tolerance = DEFAULT_TOL) -> Half:
    if variant == "RD":
        return rd_half(tol)[0]
    if variant == "TO":
        return to_half(tol)[0]
    if variant == "TC-I":
        return tc_cap(tol)[0]
    if variant in ("TC-II", "TC-III"):
        return tc_rectangle_half(tol=tol)
    raise DomainError(f"unknown reglue variant {variant!r}; choose from {', '.join(VARIANTS)}")


def reglue_spec(variant: str, tol: Tolerance = DEFAULT_TOL) -> tuple[Half, GlueSpec]:
    half = reglue_half(variant, tol)
    return half, pin_correspondence(half, _RULES[variant], tol)


def half_and_reglue(variant: str, tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    """Glue two copies of a regularized half with the turn named by ``variant``.

    RD: triangles meet rhombi. TO: triangles meet hexagons. TC-I: squares meet
    hexagons. TC-II: octagons meet octagons. TC-III: octagons and hexagons
    meet triangles.
    """
    half, spec = reglue_spec(variant, tol)
    return join(half.solid, half.solid, spec, tol)
