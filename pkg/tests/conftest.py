import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from equiprojective.constructions import catalog  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def built(name: str):
    """Catalog solid by name, or the exception raised while building it."""
    entry = next(e for e in catalog() if e.name == name)
    try:
        return entry.build()
    except Exception as exc:  # failures are reported by the tests that need the solid
        return exc


@pytest.fixture(scope="session")
def catalog_solids():
    out = {}
    for e in catalog():
        P = built(e.name)
        if not isinstance(P, Exception):
            out[e.name] = P
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
