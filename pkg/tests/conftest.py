import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from knotbounds.diagram import validate  # noqa: E402

TREFOIL_PD = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]
FIGURE8_PD = [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)]

# filled by test_acceptance, printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def trefoil():
    return validate(TREFOIL_PD)


@pytest.fixture
def figure8():
    return validate(FIGURE8_PD)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
