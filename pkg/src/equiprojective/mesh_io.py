"""OFF reading and OFF/OBJ/VRML writing."""

from __future__ import annotations

import numpy as np

from .errors import MeshParseError
from .numeric import DEFAULT_TOL, Tolerance
from .polyhedron import Polyhedron, build


def _tokens(text: str):
    """Yield (line number, tokens) for each non-blank line with comments removed."""
    for no, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if toks:
            yield no, toks


def _signed_volume(verts: np.ndarray, faces) -> float:
    total = 0.0
    for f in faces:
        p0 = verts[f[0]]
        for a, b in zip(f[1:-1], f[2:]):
            total += float(np.dot(p0, np.cross(verts[a], verts[b])))
    return total / 6.0


def parse_off(text: str) -> tuple[np.ndarray, list[list[int]]]:
    """Vertices and face loops from OFF text, without geometric validation.

    The edge count in the header is advisory and ignored. Trailing per-face
    colour values are ignored too.
    """
    lines = _tokens(text)
    try:
        no, toks = next(lines)
    except StopIteration:
        raise MeshParseError("empty input", 1) from None
    if toks[0] != "OFF":
        raise MeshParseError(f"expected 'OFF' header, found {toks[0]!r}", no)
    counts = toks[1:]
    if not counts:
        try:
            no, counts = next(lines)
        except StopIteration:
            raise MeshParseError("missing vertex/face counts", no) from None
    try:
        nv, nf = int(counts[0]), int(counts[1])
    except (IndexError, ValueError):
        raise MeshParseError(f"bad count line {' '.join(counts)!r}", no) from None
    if nv < 0 or nf < 0:
        raise MeshParseError("negative counts", no)

    verts = np.empty((nv, 3))
    for i in range(nv):
        try:
            no, toks = next(lines)
        except StopIteration:
            raise MeshParseError(f"expected {nv} vertices, found {i}", no) from None
        try:
            verts[i] = [float(t) for t in toks[:3]]
        except ValueError:
            raise MeshParseError(f"bad vertex coordinates {' '.join(toks)!r}", no) from None
        if len(toks) < 3:
            raise MeshParseError("vertex needs three coordinates", no)

    faces = []
    for i in range(nf):
        try:
            no, toks = next(lines)
        except StopIteration:
            raise MeshParseError(f"expected {nf} faces, found {i}", no) from None
        try:
            n = int(toks[0])
            idx = [int(t) for t in toks[1 : 1 + n]]
        except ValueError:
            raise MeshParseError(f"bad face line {' '.join(toks)!r}", no) from None
        if len(idx) != n:
            raise MeshParseError(f"face declares {n} vertices but lists {len(idx)}", no)
        bad = [j for j in idx if not 0 <= j < nv]
        if bad:
            raise MeshParseError(f"face references missing vertex {bad[0]}", no)
        faces.append(idx)
    extra = next(lines, None)
    if extra is not None:
        raise MeshParseError("unexpected data after the last face", extra[0])
    return verts, faces


def read_off(text: str, tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    """Parse and validate an OFF mesh.

    Consistently inward-facing loops are flipped globally. Mixed orientation
    is left for validation to reject.
    """
    verts, faces = parse_off(text)
    if faces and _signed_volume(verts, faces) < 0:
        faces = [f[::-1] for f in faces]
    return build(verts, faces, tol)


def _fmt(x: float) -> str:
    return format(float(x) + 0.0, ".17g")


def write_off(P: Polyhedron) -> str:
    out = ["OFF", f"{P.V} {P.F} {P.E}"]
    out += [" ".join(_fmt(c) for c in v) for v in P.vertices]
    out += [" ".join(str(i) for i in (len(f), *f)) for f in P.faces]
    return "\n".join(out) + "\n"


def write_obj(P: Polyhedron) -> str:
    out = [f"# {P.V} vertices, {P.F} faces"]
    out += ["v " + " ".join(_fmt(c) for c in v) for v in P.vertices]
    out += ["f " + " ".join(str(i + 1) for i in f) for f in P.faces]
    return "\n".join(out) + "\n"


def write_vrml(P: Polyhedron) -> str:
    points = ",\n        ".join(" ".join(_fmt(c) for c in v) for v in P.vertices)
    index = ",\n        ".join(", ".join(str(i) for i in f) + ", -1" for f in P.faces)
    return (
        "#VRML V2.0 utf8\n"
        "Shape {\n"
        "  appearance Appearance { material Material { diffuseColor 0.8 0.8 0.8 } }\n"
        "  geometry IndexedFaceSet {\n"
        "    solid TRUE\n"
        "    convex TRUE\n"
        "    coord Coordinate {\n"
        f"      point [\n        {points}\n      ]\n"
        "    }\n"
        f"    coordIndex [\n        {index}\n    ]\n"
        "  }\n"
        "}\n"
    )


WRITERS = {"off": write_off, "obj": write_obj, "vrml": write_vrml}
