import pytest

from reflfields.numtheory import enumerate_fundamental_discriminants
from reflfields.pipeline import H2Definition, enumerate_admissible, vinberg_filter


@pytest.fixture(scope="session")
def all_discriminants():
    return enumerate_fundamental_discriminants(100_000)


@pytest.fixture(scope="session")
def genus_report():
    return vinberg_filter(enumerate_admissible(100_000, H2Definition.GENUS_NUMBER))


@pytest.fixture(scope="session")
def sylow2_report():
    return vinberg_filter(enumerate_admissible(100_000, H2Definition.SYLOW2_ORDER))


ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
