from .prisms import biprism, chord_section, gyrobifastigium, section_prism
from .catalog import GENERATORS, CatalogEntry, NotEquiprojective, catalog, entry, find_entry, generate
from .equitruncated import (
    equitruncated_pentagonal_rotunda,
    equitruncated_pyramid,
    equitruncated_tetrahedron,
    equitruncated_triangular_cupola,
)
from .ops import CutPlane, cut, cut_all, glue, transformed
from .reglue import GlueSpec, Half, half_and_reglue, join
from .solids import (
    box,
    cube,
    pentagonal_rotunda,
    prism,
    prism_over,
    rhombic_dodecahedron,
    square_pyramid,
    tetrahedron,
    triangular_cupola,
    truncated_cuboctahedron,
    truncated_octahedron,
    zonohedron,
)

__all__ = [
    "GENERATORS",
    "CatalogEntry",
    "CutPlane",
    "GlueSpec",
    "Half",
    "NotEquiprojective",
    "biprism",
    "box",
    "catalog",
    "chord_section",
    "cube",
    "cut",
    "cut_all",
    "entry",
    "equitruncated_pentagonal_rotunda",
    "equitruncated_pyramid",
    "equitruncated_tetrahedron",
    "equitruncated_triangular_cupola",
    "find_entry",
    "generate",
    "glue",
    "gyrobifastigium",
    "half_and_reglue",
    "join",
    "pentagonal_rotunda",
    "prism",
    "prism_over",
    "rhombic_dodecahedron",
    "section_prism",
    "square_pyramid",
    "tetrahedron",
    "transformed",
    "triangular_cupola",
    "truncated_cuboctahedron",
    "truncated_octahedron",
    "zonohedron",
]
