import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from samples import g_star, triangle  # noqa: E402


@pytest.fixture
def tri():
    return triangle()


@pytest.fixture
def gstar():
    return g_star()


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
