"""Combined recognizer and shadow verdict for one solid."""

from __future__ import annotations

from dataclasses import dataclass

from .constructions.catalog import Expected, NotEquiprojective
from .equiprojectivity import CompensationCertificate, decide, enumerate_duples
from .numeric import DEFAULT_TOL, Tolerance
from .polyhedron import Polyhedron
from .shadow import DEFAULT_SAMPLES, ShadowReport, measure_k


@dataclass
class VerifyReport:
    name: str
    duples: int
    certificate: CompensationCertificate
    shadow: ShadowReport
    expected_k: Expected | None = None

    @property
    def passed(self) -> bool:
        """Certified, constant shadow, and matching the expected k when one is known."""
        if not (self.certificate.certified and self.shadow.constant):
            return False
        if self.expected_k is None:
            return True
        return self.expected_k is not NotEquiprojective and self.shadow.k == self.expected_k

    def to_dict(self) -> dict:
        out = {"name": self.name, "duples": self.duples}
        out.update(self.certificate.to_dict())
        out["shadow"] = self.shadow.to_dict()
        if self.expected_k is NotEquiprojective:
            out["expected_k"] = "not-equiprojective"
        else:
            out["expected_k"] = self.expected_k
        out["pass"] = self.passed
        return out

    def summary(self) -> str:
        verdict = "certified" if self.certificate.certified else f"refuted ({self.certificate.refutation_kind})"
        if self.shadow.constant:
            shadow = f"k={self.shadow.k}"
        else:
            (_, a), (_, b) = self.shadow.witness
            shadow = f"non-constant ({a} vs {b})"
        expected = "" if self.expected_k is None else f", expected {self.expected_k!r}"
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.duples} duples, {verdict}, {shadow} over {self.shadow.samples} directions{expected}"


def verify(
    P: Polyhedron,
    name: str = "solid",
    expected_k: Expected | None = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
) -> VerifyReport:
    return VerifyReport(
        name=name,
        duples=len(enumerate_duples(P)),
        certificate=decide(P, tol),
        shadow=measure_k(P, samples, seed, tol),
        expected_k=expected_k,
    )
