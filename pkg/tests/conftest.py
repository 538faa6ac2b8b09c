import pytest

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, title = marker.args
    rec = _CRITERIA.setdefault(number, {"title": title, "passed": True, "seconds": 0.0, "ran": False})
    rec["seconds"] += report.duration
    if report.when == "call":
        rec["ran"] = True
    if report.failed or report.skipped:
        rec["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        rec = _CRITERIA[number]
        status = "PASS" if rec["passed"] and rec["ran"] else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {number}: {rec['title']}  ({rec['seconds']:.2f}s)")
