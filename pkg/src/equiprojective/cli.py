"""Command-line entry point.

Exit codes: 0 pass, 1 verification failed, 2 usage, 3 unreadable or invalid
input file, 4 geometric degeneracy.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .constructions.catalog import NotEquiprojective, catalog, find_entry, generate
from .equiprojectivity import decide
from .errors import DegenerateDirectionError, DomainError, GeometryError, MeshError, MeshParseError
from .mesh_io import WRITERS, read_off
from .report import verify
from .shadow import silhouette_count

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_IO, EXIT_DEGENERATE = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _params(pairs: list[str]) -> dict[str, str]:
    out = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise CliError(f"--param expects key=value, got {item!r}", EXIT_USAGE)
        out[key] = value
    return out


def _generate(name: str, params: dict[str, str]):
    try:
        return generate(name, **params)
    except DomainError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc
    except GeometryError as exc:
        raise CliError(f"{name}: {exc}", EXIT_DEGENERATE) from exc


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from exc
    try:
        return read_off(text)
    except (MeshParseError, MeshError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_IO) from exc


def _source(args) -> tuple[object, str, object]:
    """Solid, display name, and expected k (None when unknown)."""
    if args.gen:
        params = _params(args.param)
        P = _generate(args.gen, params)
        e = find_entry(args.gen, params)
        return P, e.name if e else args.gen, e.expected_k if e else None
    if not args.file:
        raise CliError("give a mesh file or --gen NAME", EXIT_USAGE)
    return _load(args.file), args.file, None


def _vector(text: str) -> np.ndarray:
    try:
        v = np.array([float(x) for x in text.split(",")])
    except ValueError:
        raise CliError(f"--dir expects x,y,z, got {text!r}", EXIT_USAGE) from None
    if v.shape != (3,) or not np.any(v):
        raise CliError(f"--dir expects a nonzero x,y,z, got {text!r}", EXIT_USAGE)
    return v


def cmd_gen(args) -> int:
    P = _generate(args.name, _params(args.param))
    fmt = args.format or {".obj": "obj", ".wrl": "vrml"}.get(Path(args.output).suffix.lower(), "off")
    try:
        Path(args.output).write_text(WRITERS[fmt](P))
    except OSError as exc:
        raise CliError(f"cannot write {args.output}: {exc.strerror}", EXIT_IO) from exc
    print(f"wrote {args.output} ({fmt}, V={P.V} E={P.E} F={P.F})")
    return EXIT_PASS


def cmd_verify(args) -> int:
    P, name, expected = _source(args)
    rep = verify(P, name, expected, samples=args.samples, seed=args.seed)
    print(json.dumps(rep.to_dict(), indent=2) if args.json else rep.summary())
    return EXIT_PASS if rep.passed else EXIT_FAIL


def cmd_shadow(args) -> int:
    P, _, _ = _source(args)
    d = _vector(args.dir)
    try:
        print(silhouette_count(P, d))
    except DegenerateDirectionError as exc:
        normals = "; ".join(f"face {f} normal {np.round(P.normals[f], 6).tolist()}" for f in exc.faces)
        print(f"degenerate direction: parallel to {len(exc.faces)} face(s): {normals}")
        return EXIT_DEGENERATE
    return EXIT_PASS


def cmd_certify(args) -> int:
    P, _, _ = _source(args)
    cert = decide(P)
    if args.json:
        print(json.dumps(cert.to_dict(), indent=2))
    elif cert.certified:
        print(f"certified: {len(cert.pairs)} compensating pairs")
    else:
        print(f"refuted ({cert.refutation_kind}): {len(cert.refutation)} duples")
    return EXIT_PASS if cert.certified else EXIT_FAIL


def cmd_catalog(args) -> int:
    rows = [
        {
            "name": e.name,
            "generator": e.generator,
            "params": e.params,
            "expected_k": "not-equiprojective" if e.expected_k is NotEquiprojective else e.expected_k,
        }
        for e in catalog()
    ]
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        width = max(len(r["name"]) for r in rows)
        for r in rows:
            print(f"{r['name']:<{width}}  {r['expected_k']}")
    return EXIT_PASS


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="OFF mesh")
    p.add_argument("--gen", metavar="NAME", help="use a generated solid instead of a file")
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")


def parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="equiprojective", description="Recognize and build equiprojective polyhedra.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a named solid to a mesh file")
    p.add_argument("name")
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--format", choices=sorted(WRITERS))
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run the recognizer and the shadow oracle")
    _add_source(p)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("shadow", help="silhouette size along one direction")
    _add_source(p)
    p.add_argument("--dir", required=True, metavar="X,Y,Z")
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("catalog", help="list named solids and their expected k")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("certify", help="print the compensating-pair certificate or refutation")
    _add_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = parser().parse_args(argv)
    if getattr(args, "samples", 1) < 1:
        print("error: --samples must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
