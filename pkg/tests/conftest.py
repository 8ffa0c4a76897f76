import pytest

from monoidlab.families import build

# filled by test_acceptance; printed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def free1():
    return build("free:1")


@pytest.fixture
def free2():
    return build("free:2")


@pytest.fixture
def num2():
    return build("numerical:2")


@pytest.fixture
def rationals():
    return build("rationals")


@pytest.fixture
def chain12():
    return build("chain:1,2")
