import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cubic4 import pipeline_nonplanar, pipeline_planar, pipeline_wormald  # noqa: E402


@pytest.fixture(scope="session")
def wormald14():
    return pipeline_wormald(14)


@pytest.fixture(scope="session")
def nonplanar14():
    return pipeline_nonplanar(14)


@pytest.fixture(scope="session")
def planar14():
    return pipeline_planar(14)


@pytest.fixture(scope="session")
def census12(wormald14):
    """All cyclically 4-connected cubic graphs with at most 12 vertices."""
    return [g for n in (8, 10, 12) for g in wormald14.graphs(n)]


@pytest.fixture(scope="session")
def census10(wormald14):
    return [g for n in (8, 10) for g in wormald14.graphs(n)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
