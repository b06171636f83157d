"""Recognition and construction of equiprojective convex polyhedra."""

from .numeric import DEFAULT_TOL, EPS, Tolerance, hull2d, hull3d
from .polyhedron import Polyhedron, build
from .equiprojectivity import (
    CompensationCertificate,
    EdgeFaceDuple,
    check_certificate,
    compensates,
    decide,
    enumerate_duples,
)
from .shadow import ShadowReport, is_degenerate_direction, measure_k, sample_directions, silhouette_count
from .mesh_io import read_off, write_obj, write_off, write_vrml
from .report import VerifyReport, verify

__all__ = [
    "DEFAULT_TOL",
    "EPS",
    "CompensationCertificate",
    "EdgeFaceDuple",
    "Polyhedron",
    "ShadowReport",
    "Tolerance",
    "VerifyReport",
    "build",
    "check_certificate",
    "compensates",
    "decide",
    "enumerate_duples",
    "hull2d",
    "hull3d",
    "is_degenerate_direction",
    "measure_k",
    "read_off",
    "sample_directions",
    "silhouette_count",
    "verify",
    "write_obj",
    "write_off",
    "write_vrml",
]
