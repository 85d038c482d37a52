"""Collects acceptance results and prints one PASS/FAIL line per criterion."""

import pytest

_RESULTS: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    num, title = marker.args
    if report.when == "setup" and report.passed:
        return
    status = "PASS" if report.passed else "FAIL"
    _RESULTS[num] = (title, status, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_RESULTS):
        title, status, duration = _RESULTS[num]
        terminalreporter.write_line(f"{status} criterion {num:>2}: {title} ({duration:.2f} s)")
