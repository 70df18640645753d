import pytest

from sepsym import chi

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def full_chi_records():
    """The complete table of chi records for q in [2, 10^4], computed once."""
    return chi.chi_table(2, 10_000)


@pytest.fixture
def acceptance_log():
    def record(line):
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("=", "acceptance summary")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
