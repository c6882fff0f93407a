import pytest
from hypothesis import settings

from socode.io import load_bundled

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")

_ACCEPTANCE: list[tuple[str, str, float]] = []


@pytest.fixture(scope="session")
def bundled():
    return load_bundled


@pytest.fixture(scope="session")
def table_cache(tmp_path_factory):
    return tmp_path_factory.mktemp("soct")


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, dur in _ACCEPTANCE:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}  ({dur:.2f}s)")
