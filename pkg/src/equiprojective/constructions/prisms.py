"""Two prisms joined along a square side face with a quarter turn."""

from __future__ import annotations

from math import cos, pi, radians, sin

import numpy as np

from ..errors import DomainError
from ..numeric import DEFAULT_TOL, Tolerance
from ..polyhedron import Polyhedron
from .ops import glue
from .solids import prism_over

# Lateral face over the chord v_{k-1} v_0 has loop [k-1, 0, k, 2k-1]. Shift 0
# sends the bottom chord of one prism onto a vertical edge of the other.
TWIST_SHIFT = 0


def chord_section(k: int, end_angle: float = 60.0) -> np.ndarray:
    """Convex k-gon with a unit edge from (0, 0) to (1, 0) and the rest on a circular arc.

    The interior angles at both ends of the unit edge equal ``end_angle``
    degrees. For k = 3 and 60 degrees this is the unit equilateral triangle.
    Vertices run counter-clockwise starting at (1, 0) and ending at (0, 0).
    """
    if k < 3:
        raise DomainError("a cross-section needs k >= 3")
    theta = radians(end_angle)
    arc = 2 * theta * (k - 1) / (k - 2)
    if not 0 < theta < pi / 2 or arc >= 2 * pi:
        raise DomainError(f"end angle {end_angle} does not give a convex {k}-gon with acute ends")
    r = 0.5 / sin(arc / 2)
    yc = -r * cos(arc / 2)
    start = np.arctan2(-yc, 0.5)
    step = arc / (k - 1)
    pts = [(0.5 + r * cos(start + i * step), yc + r * sin(start + i * step)) for i in range(k)]
    pts[0], pts[-1] = (1.0, 0.0), (0.0, 0.0)
    return np.array(pts)


def section_prism(k: int, end_angle: float = 60.0) -> tuple[Polyhedron, int]:
    """Unit-height prism over :func:`chord_section` and the id of its unit square face."""
    P = prism_over(chord_section(k, end_angle), 1.0)
    return P, 2 + (k - 1)


def biprism(k1: int, k2: int, end_angle: float = 60.0, tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    """Join a k1-gonal and a k2-gonal prism square to square with a 90 degree twist.

    With acute angles at the glued edge, every seam dihedral stays below 180
    degrees, so the union is convex. ``biprism(3, 3)`` is the gyrobifastigium.
    """
    A, fa = section_prism(k1, end_angle)
    B, fb = section_prism(k2, end_angle)
    return glue(A, B, fa, fb, shift=TWIST_SHIFT, tol=tol)


def gyrobifastigium(tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    return biprism(3, 3, tol=tol)
