import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

PAPER_TEXT = b"IEEECOMPUTATIONALINTELLIGENCE"

_criteria = {}


@pytest.fixture
def paper_text():
    return PAPER_TEXT


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid and "::test_criterion_" in report.nodeid:
        _criteria[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        status = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
