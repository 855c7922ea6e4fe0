import re

_CRITERION = re.compile(r"test_acceptance\.py::test_(A\d+)_(\w+)")
_results: dict[str, tuple[str, bool]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or report.when not in ("setup", "call"):
        return
    key = m.group(1)
    ok = report.passed if report.when == "call" else not report.failed
    if report.when == "setup" and ok:
        return
    _results[key] = (m.group(2).replace("_", " "), ok)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results, key=lambda k: int(k[1:])):
        name, ok = _results[key]
        terminalreporter.write_line(f"{key:<4} {'PASS' if ok else 'FAIL'}  {name}")
