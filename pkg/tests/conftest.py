import pytest

from orelab import census_critical

ACCEPTANCE_LINES: list[tuple[int, str]] = []


@pytest.fixture(scope="session")
def census4_8():
    return census_critical(8, 4)


@pytest.fixture(scope="session")
def census5_8():
    return census_critical(8, 5)


@pytest.fixture(scope="session")
def acceptance_log():
    def record(criterion: int, line: str) -> None:
        ACCEPTANCE_LINES.append((criterion, line))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for criterion, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(f"criterion {criterion:2d}: pass - {line}")
