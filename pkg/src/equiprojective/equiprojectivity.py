"""Edge-face duples, the compensation graph and the equiprojectivity test.

A polyhedron is equiprojective exactly when its duples split into
compensating pairs. Every duple has at most two compensating partners, so
the compensation graph is a disjoint union of paths and cycles and a
perfect matching exists iff every component has an even number of nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InconsistentGeometryError
from .numeric import DEFAULT_TOL, Tolerance, normalize, opposite_direction, parallel
from .polyhedron import Edge, Polyhedron, edge_key


@dataclass(frozen=True)
class EdgeFaceDuple:
    edge: Edge
    face: int
    direction: np.ndarray = field(compare=False, repr=False)

    @property
    def key(self) -> tuple[Edge, int]:
        return (self.edge, self.face)


def enumerate_duples(P: Polyhedron) -> list[EdgeFaceDuple]:
    """All 2E duples, ordered by (edge, face).

    Loops are stored counter-clockwise from outside, so the clockwise
    direction of an edge is its stored predecessor minus its successor.
    """
    out = []
    for fi, loop in enumerate(P.faces):
        for a, b in zip(loop, loop[1:] + loop[:1]):
            d = normalize(P.vertices[a] - P.vertices[b])
            out.append(EdgeFaceDuple(edge_key(a, b), fi, d))
    out.sort(key=lambda d: d.key)
    return out


def compensates(P: Polyhedron, d1: EdgeFaceDuple, d2: EdgeFaceDuple, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Scalar compensation test straight from the vertex coordinates."""
    if d1.key == d2.key:
        return False
    u = P.vertices[d1.edge[1]] - P.vertices[d1.edge[0]]
    v = P.vertices[d2.edge[1]] - P.vertices[d2.edge[0]]
    if not parallel(u, v, tol):
        return False
    if d1.face != d2.face and not parallel(P.face_normal(d1.face), P.face_normal(d2.face), tol):
        return False
    return opposite_direction(d1.direction, d2.direction, tol)


@dataclass(frozen=True)
class CompensationGraph:
    duples: list[EdgeFaceDuple]
    adjacency: list[list[int]]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)


def _pairwise_cross_norm(a: np.ndarray) -> np.ndarray:
    return np.linalg.norm(np.cross(a[:, None, :], a[None, :, :]), axis=2)


def build_compensation_graph(P: Polyhedron, tol: Tolerance = DEFAULT_TOL, duples=None) -> CompensationGraph:
    duples = enumerate_duples(P) if duples is None else list(duples)
    D = np.array([d.direction for d in duples])
    faces = np.array([d.face for d in duples])
    par_edge = _pairwise_cross_norm(D) < tol.eps
    par_face = _pairwise_cross_norm(P.normals) < tol.eps
    face_ok = par_face[faces[:, None], faces[None, :]]
    adj_mat = par_edge & face_ok & (D @ D.T < 0)
    np.fill_diagonal(adj_mat, False)
    adjacency = [list(np.nonzero(row)[0]) for row in adj_mat]
    adjacency = [[int(j) for j in row] for row in adjacency]
    for i, row in enumerate(adjacency):
        if len(row) > 2:
            raise InconsistentGeometryError(
                f"duple {duples[i].key} has {len(row)} compensating duples; tolerance too loose?"
            )
    return CompensationGraph(duples, adjacency)


@dataclass(frozen=True)
class CompensationCertificate:
    """A perfect matching into compensating pairs, or the component blocking one."""

    pairs: list[tuple[EdgeFaceDuple, EdgeFaceDuple]] | None
    refutation: list[EdgeFaceDuple] | None = None
    refutation_kind: str | None = None
    graph: CompensationGraph | None = field(default=None, repr=False, compare=False)

    @property
    def certified(self) -> bool:
        return self.pairs is not None

    def to_dict(self) -> dict:
        def enc(d):
            return [list(d.edge), d.face]

        if self.certified:
            return {"certificate": [[enc(a), enc(b)] for a, b in self.pairs]}
        return {"refutation": {"kind": self.refutation_kind, "duples": [enc(d) for d in self.refutation]}}


def _components(adjacency: list[list[int]]):
    """Yield (kind, ordered nodes) for each path/cycle component."""
    seen = [False] * len(adjacency)

    def walk(start, prev):
        order = [start]
        seen[start] = True
        cur = start
        while True:
            nxt = [j for j in adjacency[cur] if j != prev and not seen[j]]
            if not nxt:
                return order
            prev, cur = cur, nxt[0]
            seen[cur] = True
            order.append(cur)

    for i, nb in enumerate(adjacency):
        if not seen[i] and len(nb) < 2:
            yield "path", walk(i, None)
    for i in range(len(adjacency)):
        if not seen[i]:
            yield "cycle", walk(i, None)


def _match(graph: CompensationGraph) -> CompensationCertificate:
    keys = [d.key for d in graph.duples]
    pairs: list[tuple[int, int]] = []
    for kind, nodes in _components(graph.adjacency):
        if len(nodes) % 2:
            return CompensationCertificate(
                None, [graph.duples[i] for i in nodes], f"odd {kind} of {len(nodes)} duple(s)", graph
            )
        even = [(nodes[i], nodes[i + 1]) for i in range(0, len(nodes), 2)]
        if kind == "cycle":
            odd = [(nodes[i], nodes[(i + 1) % len(nodes)]) for i in range(1, len(nodes), 2)]

            def best(m):
                return min(tuple(sorted((keys[a], keys[b]))) for a, b in m)

            if best(odd) < best(even):
                even = odd
        pairs.extend(even)
    ordered = sorted(
        (tuple(sorted((a, b), key=lambda i: keys[i])) for a, b in pairs),
        key=lambda p: (keys[p[0]], keys[p[1]]),
    )
    return CompensationCertificate([(graph.duples[a], graph.duples[b]) for a, b in ordered], graph=graph)


def decide(P: Polyhedron, tol: Tolerance = DEFAULT_TOL) -> CompensationCertificate:
    """Partition the duples of P into compensating pairs, or refute."""
    return _match(build_compensation_graph(P, tol))


def is_self_compensating(P: Polyhedron, f: int, tol: Tolerance = DEFAULT_TOL) -> bool:
    own = [d for d in enumerate_duples(P) if d.face == f]
    return _match(build_compensation_graph(P, tol, own)).certified


def check_certificate(P: Polyhedron, cert: CompensationCertificate, tol: Tolerance = DEFAULT_TOL) -> list[str]:
    """Independent audit of a certificate; returns a list of violations."""
    problems = []
    expected = {d.key for d in enumerate_duples(P)}
    seen: dict = {}
    for a, b in cert.pairs or []:
        for d in (a, b):
            seen[d.key] = seen.get(d.key, 0) + 1
        if not compensates(P, a, b, tol):
            problems.append(f"pair {a.key} / {b.key} does not compensate")
    for k in expected:
        if seen.get(k, 0) != 1:
            problems.append(f"duple {k} covered {seen.get(k, 0)} times")
    for k in seen.keys() - expected:
        problems.append(f"unknown duple {k}")
    return problems
