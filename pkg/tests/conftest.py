import os

import pytest

HERE = os.path.dirname(__file__)
DATA = os.path.join(HERE, "data")
FIXTURE_MANIFEST = os.path.join(
    HERE, os.pardir, "src", "heapsize", "data", "fixture", "manifest.json"
)

# (k, beta) of the two published Heaps functions
FUNCTION_1 = (56.31101, 0.52054)
FUNCTION_2 = (35.40312, 0.5442)


def data_path(name):
    return os.path.join(DATA, name)


@pytest.fixture
def fixture_manifest():
    return os.path.abspath(FIXTURE_MANIFEST)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")
