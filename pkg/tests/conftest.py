import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, limit): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    rep = outcome.get_result()
    number, title, limit = mark.args
    if rep.when == "call" or rep.failed:
        elapsed = dict(item.user_properties).get("elapsed")
        prev = _RESULTS.get(number)
        ok = rep.passed and (prev is None or prev[0])
        _RESULTS[number] = (ok, title, limit, elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_RESULTS):
        ok, title, limit, elapsed = _RESULTS[number]
        took = f"{elapsed:.2f} s" if elapsed is not None else "n/a"
        tr.line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({took}, limit {limit} s)")
