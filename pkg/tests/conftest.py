import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from periscope.search import enumerate_connected_graphs  # noqa: E402


@pytest.fixture(scope="session")
def connected_upto6():
    return [g for n in range(1, 7) for g in enumerate_connected_graphs(n)]


@pytest.fixture(scope="session")
def connected_upto7(connected_upto6):
    return connected_upto6 + list(enumerate_connected_graphs(7))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    verdicts = getattr(module, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdicts):
        terminalreporter.write_line(verdicts[number])
