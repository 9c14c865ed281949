import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tsim.casestudy import ITEMS, load_case_study  # noqa: E402

TABLE4 = [
    [1, 1, 1, 0, 0],
    [0, 0, 1, 1, 1],
    [0, 1, 1, 1, 1],
    [1, 1, 1, 0, 1],
    [0, 0, 1, 1, 0],
    [1, 1, 0, 0, 1],
    [1, 1, 0, 1, 0],
    [0, 1, 0, 1, 0],
    [0, 1, 1, 0, 1],
]


@pytest.fixture
def table4():
    return TABLE4


@pytest.fixture
def case_ds():
    ds = load_case_study("matrix")
    assert ds.catalog.items == ITEMS
    return ds


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(test_acceptance.RESULTS):
        status, title = test_acceptance.RESULTS[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
