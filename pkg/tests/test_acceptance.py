"""End-to-end acceptance checks, one test per criterion.

Run standalone with ``python tests/test_acceptance.py`` for a plain pass/fail
listing; under pytest the same lines appear in the terminal summary.
"""

import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from equiprojective import build, decide, hull3d, measure_k, read_off, sample_directions, write_off  # noqa: E402
from equiprojective.constructions import (  # noqa: E402
    catalog,
    entry,
    pentagonal_rotunda,
    square_pyramid,
    tetrahedron,
    triangular_cupola,
    zonohedron,
)
from equiprojective.constructions.equitruncated import (  # noqa: E402
    cupola_planes,
    faces_on_planes,
    pyramid_planes,
    rotunda_planes,
    tetrahedron_planes,
)
from equiprojective.constructions.ops import cut  # noqa: E402
from equiprojective.constructions.prisms import section_prism  # noqa: E402
from equiprojective.constructions.reglue import VARIANTS, reglue_half  # noqa: E402
from equiprojective.equiprojectivity import build_compensation_graph  # noqa: E402
from equiprojective.shadow import hull_counts, sign_change_counts, silhouette_count, silhouette_edges  # noqa: E402
from conftest import ACCEPTANCE_LINES, built  # noqa: E402
from oracles import certificate_violations  # noqa: E402

SEED = 0
SWEEP = (
    ["cube"]
    + [f"prism_{p}" for p in range(3, 9)]
    + ["gyrobifastigium", "biprism_3_4"]
    + [
        "equitruncated_tetrahedron",
        "equitruncated_pyramid",
        "equitruncated_triangular_cupola",
        "equitruncated_pentagonal_rotunda_1",
        "equitruncated_pentagonal_rotunda_2",
        "equitruncated_rhombic_dodecahedron",
        "equitruncated_octahedron",
        "equitruncated_cuboctahedron_I",
        "equitruncated_cuboctahedron_II",
        "equitruncated_cuboctahedron_III",
    ]
)
NEGATIVES = ["tetrahedron", "square_pyramid", "triangular_cupola", "pentagonal_rotunda"]


def solids():
    """Every catalog solid that builds, keyed by name."""
    out = {}
    for e in catalog():
        P = built(e.name)
        if not isinstance(P, Exception):
            out[e.name] = P
    return out


def extra_certified():
    """Certified solids beyond the catalog: a few zonohedra."""
    rng = np.random.default_rng(SEED)
    return {f"zonohedron_{m}": zonohedron(rng.standard_normal((m, 3))) for m in (3, 4, 5, 7)}


def random_hulls(count=50):
    rng = np.random.default_rng(SEED)
    out = []
    for _ in range(count):
        pts = rng.standard_normal((int(rng.integers(10, 31)), 3))
        out.append(hull3d(pts / np.linalg.norm(pts, axis=1, keepdims=True)))
    return out


def everything():
    """Every solid the suite exercises, for the criteria quantified over the whole suite."""
    pool = dict(solids())
    pool.update(extra_certified())
    pool.update({f"random_hull_{i}": P for i, P in enumerate(random_hulls(10))})
    return pool


def criterion_1():
    t0 = time.perf_counter()
    bad = []
    for name in SWEEP:
        e = entry(name)
        P = built(name)
        if isinstance(P, Exception):
            bad.append(f"{name}: {type(P).__name__}")
            continue
        cert = decide(P)
        rep = measure_k(P, 1000, seed=SEED)
        got = rep.k if rep.constant else "non-constant"
        if not cert.certified or got != e.expected_k:
            bad.append(f"{name}: k={got} expected {e.expected_k}{'' if cert.certified else ' (refuted)'}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 10.0:
        bad.append(f"runtime {elapsed:.1f}s")
    return not bad, f"{len(SWEEP) - len(bad)}/{len(SWEEP)} match in {elapsed:.1f}s" + (f"; {'; '.join(bad)}" if bad else "")


def criterion_2():
    bad = []
    for name in NEGATIVES:
        P = built(name)
        cert = decide(P)
        rep = measure_k(P, 1000, seed=SEED)
        ok = not cert.certified and cert.refutation and not rep.constant and rep.witness is not None
        if ok:
            (d1, c1), (d2, c2) = rep.witness
            ok = c1 != c2 and silhouette_count(P, d1) == c1 and silhouette_count(P, d2) == c2
        if not ok:
            bad.append(name)
    return not bad, f"{len(NEGATIVES) - len(bad)}/{len(NEGATIVES)} refuted with witnesses" + (f"; failed: {bad}" if bad else "")


def criterion_3():
    pool = random_hulls(50) + list(solids().values())
    disagreements = 0
    for i, P in enumerate(pool):
        D = sample_directions(200, SEED + i, P)
        disagreements += int(np.sum(sign_change_counts(P, D) != hull_counts(P, D)))
    return disagreements == 0, f"{disagreements} disagreements over {len(pool)} solids x 200 directions"


def criterion_4():
    checked, violations = 0, []
    for name, P in everything().items():
        cert = decide(P)
        if not cert.certified:
            continue
        checked += 1
        keys = [(a.key, b.key) for a, b in cert.pairs]
        violations += [f"{name}: {v}" for v in certificate_violations(P.vertices, P.faces, keys)]
    return not violations, f"{checked} certificates, {len(violations)} violations" + (f"; {violations[:3]}" if violations else "")


def criterion_5():
    checked, bad = 0, []
    for name, P in everything().items():
        if decide(P).certified:
            checked += 1
            if not P.parallel_face_pairs():
                bad.append(name)
    return not bad, f"{checked} certified solids, {len(bad)} without parallel faces"


def criterion_6():
    ks = {}
    for name, P in solids().items():
        rep = measure_k(P, 1000, seed=SEED)
        if rep.constant:
            ks[name] = rep.k
    low = sorted(n for n, k in ks.items() if k < 6 and n != "prism_3")
    ok = ks.get("prism_3") == 5 and ks.get("cube") == 6 and ks.get("gyrobifastigium") == 6 and not low
    return ok, f"prism_3 k={ks.get('prism_3')}, cube k={ks.get('cube')}, gyrobifastigium k={ks.get('gyrobifastigium')}, others below 6: {low}"


def criterion_7():
    pool = everything()
    worst = {name: build_compensation_graph(P).max_degree for name, P in pool.items()}
    over = {n: d for n, d in worst.items() if d > 2}
    return not over, f"{len(pool)} graphs, max degree {max(worst.values())}" + (f"; over: {over}" if over else "")


def mesh_problems(P):
    """Independent validity check: closed, convex, planar, Euler."""
    out = []
    count = {}
    for loop in P.faces:
        for i in range(len(loop)):
            key = (min(loop[i], loop[i - 1]), max(loop[i], loop[i - 1]))
            count[key] = count.get(key, 0) + 1
    if any(c != 2 for c in count.values()):
        out.append("not closed")
    if P.V - len(count) + P.F != 2:
        out.append("Euler")
    lim = 1e-9 * P.scale
    for f, loop in enumerate(P.faces):
        if np.abs(P.vertices[list(loop)] @ P.normals[f] - P.offsets[f]).max() > lim:
            out.append(f"face {f} not planar")
    if np.max(P.vertices @ P.normals.T - P.offsets) > lim:
        out.append("not convex")
    try:
        build(P.vertices, P.faces)
    except Exception as exc:
        out.append(f"rebuild: {exc}")
    return out


def construction_steps():
    """Generator outputs plus every intermediate cut and glue input."""
    steps = {}
    for e in catalog():
        P = built(e.name)
        steps[e.name] = P
    sequences = {
        "equitruncated_tetrahedron": (tetrahedron(), tetrahedron_planes(tetrahedron())),
        "equitruncated_pyramid": (square_pyramid(), pyramid_planes(square_pyramid())),
        "equitruncated_triangular_cupola": (triangular_cupola(), cupola_planes()),
        "equitruncated_pentagonal_rotunda_1": (pentagonal_rotunda(), rotunda_planes(1)),
        "equitruncated_pentagonal_rotunda_2": (pentagonal_rotunda(), rotunda_planes(2)),
    }
    for name, (P, planes) in sequences.items():
        for label, plane in planes.items():
            P = cut(P, plane, allow_contact=True)
            steps[f"{name} after {label}"] = P
    for k in range(3, 7):
        steps[f"section prism {k}"] = section_prism(k)[0]
    for v in VARIANTS:
        try:
            steps[f"{v} half"] = reglue_half(v).solid
        except Exception as exc:
            steps[f"{v} half"] = exc
    return steps


def criterion_8():
    steps = construction_steps()
    bad = []
    for name, P in steps.items():
        if isinstance(P, Exception):
            bad.append(f"{name}: {type(P).__name__}")
            continue
        bad += [f"{name}: {p}" for p in mesh_problems(P)]
    return not bad, f"{len(steps)} meshes, {len(bad)} problems" + (f"; {'; '.join(bad)}" if bad else "")


def criterion_9():
    pool = solids()
    bad = []
    for name, P in pool.items():
        Q = read_off(write_off(P))
        if not Q.same_combinatorics(P) or np.abs(Q.vertices - P.vertices).max() > 1e-9 * P.scale:
            bad.append(name)
    return not bad, f"{len(pool) - len(bad)}/{len(pool)} round-trip" + (f"; failed: {bad}" if bad else "")


def rotunda_partition(eps=0.1, label="cut1_t+"):
    """Silhouette edges of variant 1 grouped by the face family they bound.

    An edge between two tracked faces belongs to its front face, the one
    facing the direction.
    """
    planes = rotunda_planes(1)
    P = built("equitruncated_pentagonal_rotunda_1")
    L = faces_on_planes(P, planes)
    base = int(np.argmin(P.normals[:, 2]))
    groups = {
        "q": {L["cut2_a"], L["cut3_a"]},
        "q'": {L["cut2_b"], L["cut3_b"]},
        "triangles": {L["cut1_t+"], L["cut1_t-"]},
        "base": {base},
    }
    d = np.array([0.0, 0.0, -1.0]) + eps * P.normals[L[label]]
    counts = dict.fromkeys(groups, 0)
    counts["other"] = 0
    edges = silhouette_edges(P, d)
    for e in edges:
        f1, f2 = P.edges[e]
        front, back = (f1, f2) if P.normals[f1] @ d > 0 else (f2, f1)
        group = next((g for f in (front, back) for g, fs in groups.items() if f in fs), "other")
        counts[group] += 1
    return len(edges), counts


def criterion_10():
    n, counts = rotunda_partition()
    parts = (counts["q"], counts["q'"], counts["triangles"], counts["base"])
    ok = n == 21 and parts == (6, 6, 2, 7) and counts["other"] == 0
    return ok, f"{n}-gon, partition {'+'.join(map(str, parts))} (other {counts['other']})"


CRITERIA = {
    1: ("catalog k sweep", criterion_1),
    2: ("negative controls", criterion_2),
    3: ("silhouette oracle equivalence", criterion_3),
    4: ("certificate soundness", criterion_4),
    5: ("certified implies parallel faces", criterion_5),
    6: ("minimality spot-check", criterion_6),
    7: ("compensation degree bound", criterion_7),
    8: ("mesh validity", criterion_8),
    9: ("OFF round-trip", criterion_9),
    10: ("rotunda shadow partition", criterion_10),
}


def run(number):
    title, fn = CRITERIA[number]
    ok, detail = fn()
    return ok, f"[{'PASS' if ok else 'FAIL'}] criterion {number} ({title}): {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, line = run(number)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [run(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
