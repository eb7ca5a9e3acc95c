from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from siegel6.structure import ClassicalStore, build_generators, recover_E6, recover_Theta8

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

GEN_TMAX = 16

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def store():
    return ClassicalStore()


@pytest.fixture(scope="session")
def classical(store):
    return {name: store.get(name, GEN_TMAX) for name in ("phi4", "phi6", "chi10", "chi12", "chi5")}


@pytest.fixture(scope="session")
def E6(store):
    return recover_E6(GEN_TMAX, store=store)


@pytest.fixture(scope="session")
def Theta8(store):
    return recover_Theta8(GEN_TMAX, store=store)


@pytest.fixture(scope="session")
def gens(store, E6, Theta8):
    return build_generators(GEN_TMAX, store, E6=E6, Theta8=Theta8)


@pytest.fixture(scope="session")
def acceptance():
    def record(number: int, title: str, ok: bool, detail: str = ""):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
