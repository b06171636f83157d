"""Named solids, their generator parameters, and the k each is expected to have."""

from __future__ import annotations

import inspect
import typing
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable

from ..errors import DomainError
from ..polyhedron import Polyhedron
from . import prisms as _bi
from . import equitruncated as _eq
from . import reglue as _rg
from . import solids as _so


class _Marker(Enum):
    NOT_EQUIPROJECTIVE = "not-equiprojective"

    def __repr__(self) -> str:
        return "NotEquiprojective"


NotEquiprojective = _Marker.NOT_EQUIPROJECTIVE
Expected = int | _Marker


GENERATORS: dict[str, Callable[..., Polyhedron]] = {
    "cube": _so.cube,
    "box": _so.box,
    "prism": _so.prism,
    "tetrahedron": _so.tetrahedron,
    "square_pyramid": _so.square_pyramid,
    "triangular_cupola": _so.triangular_cupola,
    "pentagonal_rotunda": _so.pentagonal_rotunda,
    "rhombic_dodecahedron": _so.rhombic_dodecahedron,
    "truncated_octahedron": _so.truncated_octahedron,
    "truncated_cuboctahedron": _so.truncated_cuboctahedron,
    "gyrobifastigium": _bi.gyrobifastigium,
    "biprism": _bi.biprism,
    "equitruncated_tetrahedron": _eq.equitruncated_tetrahedron,
    "equitruncated_pyramid": _eq.equitruncated_pyramid,
    "equitruncated_triangular_cupola": _eq.equitruncated_triangular_cupola,
    "equitruncated_pentagonal_rotunda": _eq.equitruncated_pentagonal_rotunda,
    "half_and_reglue": _rg.half_and_reglue,
}

_PARAM_TYPES = (int, float, str)


def generator_params(name: str) -> dict[str, type]:
    """Scalar keyword parameters a generator accepts, with their types."""
    fn = _generator(name)
    hints = typing.get_type_hints(fn)
    out = {}
    for pname, p in inspect.signature(fn).parameters.items():
        t = hints.get(pname)
        if t in _PARAM_TYPES:
            out[pname] = t
        elif p.default is not inspect.Parameter.empty and type(p.default) in _PARAM_TYPES:
            out[pname] = type(p.default)
    return out


def _generator(name: str) -> Callable[..., Polyhedron]:
    try:
        return GENERATORS[name]
    except KeyError:
        raise DomainError(f"unknown solid {name!r}") from None


def generate(name: str, **params: Any) -> Polyhedron:
    """Run a generator, coercing string parameter values to the declared types."""
    fn = _generator(name)
    types = generator_params(name)
    kwargs = {}
    for key, value in params.items():
        if key not in types:
            raise DomainError(f"{name} has no parameter {key!r}; known: {', '.join(types) or 'none'}")
        try:
            kwargs[key] = types[key](value)
        except ValueError:
            raise DomainError(f"parameter {key}={value!r} is not a valid {types[key].__name__}") from None
    return fn(**kwargs)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    generator: str
    params: dict[str, Any] = field(default_factory=dict)
    expected_k: Expected = NotEquiprojective

    def build(self) -> Polyhedron:
        return generate(self.generator, **self.params)

    @property
    def equiprojective(self) -> bool:
        return self.expected_k is not NotEquiprojective


def catalog() -> list[CatalogEntry]:
    """Every named solid with its claimed k, positives first."""
    E = CatalogEntry
    entries = [E("cube", "cube", {}, 6)]
    entries += [E(f"prism_{p}", "prism", {"k": p}, p + 2) for p in range(3, 9)]
    entries += [E("gyrobifastigium", "gyrobifastigium", {}, 6)]
    entries += [
        E(f"biprism_{a}_{b}", "biprism", {"k1": a, "k2": b}, a + b) for a in range(3, 7) for b in range(a, 7)
    ]
    # a zonohedron with m generator directions casts a 2m-gonal zonogon
    entries += [
        E("rhombic_dodecahedron", "rhombic_dodecahedron", {}, 8),
        E("truncated_octahedron", "truncated_octahedron", {}, 12),
        E("truncated_cuboctahedron", "truncated_cuboctahedron", {}, 18),
    ]
    entries += [
        E("equitruncated_tetrahedron", "equitruncated_tetrahedron", {}, 10),
        E("equitruncated_pyramid", "equitruncated_pyramid", {}, 10),
        E("equitruncated_triangular_cupola", "equitruncated_triangular_cupola", {}, 11),
        E("equitruncated_pentagonal_rotunda_1", "equitruncated_pentagonal_rotunda", {"variant": 1}, 21),
        E("equitruncated_pentagonal_rotunda_2", "equitruncated_pentagonal_rotunda", {"variant": 2}, 23),
        E("equitruncated_rhombic_dodecahedron", "half_and_reglue", {"variant": "RD"}, 10),
        E("equitruncated_octahedron", "half_and_reglue", {"variant": "TO"}, 12),
        E("equitruncated_cuboctahedron_I", "half_and_reglue", {"variant": "TC-I"}, 13),
        E("equitruncated_cuboctahedron_II", "half_and_reglue", {"variant": "TC-II"}, 16),
        E("equitruncated_cuboctahedron_III", "half_and_reglue", {"variant": "TC-III"}, 17),
    ]
    entries += [
        E(name, name)
        for name in ("tetrahedron", "square_pyramid", "triangular_cupola", "pentagonal_rotunda")
    ]
    return entries


def entry(name: str) -> CatalogEntry:
    for e in catalog():
        if e.name == name:
            return e
    raise DomainError(f"no catalog entry named {name!r}")


def find_entry(generator: str, params: dict[str, Any]) -> CatalogEntry | None:
    """Catalog entry produced by this generator call, if any."""
    if generator in {e.name for e in catalog()} and not params:
        return entry(generator)
    try:
        types = generator_params(generator)
        typed = {k: types[k](v) for k, v in params.items()}
    except (DomainError, KeyError, ValueError):
        return None
    for e in catalog():
        if e.generator == generator and e.params == typed:
            return e
    return None
