import pytest

from wpsfq.ff import make_field

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def F5():
    return make_field(5)


@pytest.fixture
def F7():
    return make_field(7)


@pytest.fixture
def F9():
    return make_field(3, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
