import pytest
from hypothesis import settings

# property suites run >= 1000 derandomized (fixed-seed) cases each
settings.register_profile("bql", max_examples=1000, derandomize=True, deadline=None)
settings.load_profile("bql")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
