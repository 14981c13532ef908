import pytest

from airygap.surface import GapConfig

# Acceptance criteria append "PASS/FAIL ..." lines here; they are echoed in the
# terminal summary so they survive pytest's output capture.
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def canonical():
    return GapConfig(-1.0, -2.0, -3.0)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
