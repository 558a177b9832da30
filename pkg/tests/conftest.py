import csv
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def load_table(name):
    """Rows of a transcribed published table as tuples of ints."""
    with open(FIXTURES / f"table_{name}.csv", newline="") as fh:
        return [tuple(int(v) for v in row.values()) for row in csv.DictReader(fh)]


@pytest.fixture(scope="session")
def whom_path_table():
    return load_table("whom_path")


@pytest.fixture(scope="session")
def hom_path_table():
    return load_table("hom_path")


@pytest.fixture(scope="session")
def whom_grid_table():
    return load_table("whom_grid")


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and (report.when == "call" or report.failed):
        _acceptance.append(report)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for report in _acceptance:
        name = report.nodeid.split("::")[-1]
        verdict = "PASS" if report.passed else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
