import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coxeter_excess.types import group_of_type  # noqa: E402

CI_TYPES = (
    ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "F4", "H3"]
    + [f"I2({m})" for m in range(3, 13)]
)
SMALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "D4", "H3", "I2(5)", "I2(6)"]

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--run-h4", action="store_true", default=False, help="include H4 in the witness battery")


def pytest_configure(config):
    config.addinivalue_line("markers", "h4: needs --run-h4")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-h4"):
        return
    skip = pytest.mark.skip(reason="H4 runs only with --run-h4")
    for item in items:
        if "h4" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, label = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {label}")


@pytest.fixture(scope="session")
def group():
    return group_of_type


@pytest.fixture(scope="session")
def A3():
    return group_of_type("A3")
