import pytest

from tritile.tiles import make_tile

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def s357():
    return make_tile(3, 5, 7)


@pytest.fixture(scope="session")
def s587():
    return make_tile(5, 8, 7, "acute")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
