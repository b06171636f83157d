"""Exception hierarchy shared by all modules."""


class GeometryError(ValueError):
    """Base class for every geometric failure raised by this package."""


class DomainError(GeometryError):
    """An input lies outside an operation's domain (e.g. a zero vector)."""


class DegenerateHullError(GeometryError):
    """Input points are collinear (2D) or coplanar (3D)."""


class MeshError(GeometryError):
    """A mesh failed polyhedron validation."""


class OpenMeshError(MeshError):
    pass


class NonPlanarFaceError(MeshError):
    pass


class NonConvexFaceError(MeshError):
    pass


class NonConvexSolidError(MeshError):
    pass


class OrientationError(MeshError):
    pass


class DegenerateCutError(GeometryError):
    """A cut plane touches a vertex/face or leaves an empty or flat solid."""


class DegenerateDirectionError(GeometryError):
    """A projection direction is parallel to one or more faces."""

    def __init__(self, message, faces=()):
        super().__init__(message)
        self.faces = tuple(faces)


class GlueError(GeometryError):
    """The faces handed to glue are not congruent under the correspondence."""


class ReflexEdgeError(NonConvexSolidError):
    """Gluing produced a reflex dihedral angle along a seam edge."""

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class InconsistentGeometryError(GeometryError):
    """A compensation graph node has degree above two (tolerance failure)."""


class PathologicalToleranceError(GeometryError):
    """Direction sampling rejected almost every candidate."""


class MeshParseError(ValueError):
    """Mesh text is syntactically invalid; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line
