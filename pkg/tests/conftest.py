import os

import pytest

HEAVY = os.environ.get("BRAIDCONG_HEAVY", "") not in ("", "0")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")
    config._criteria = {}


def pytest_collection_modifyitems(config, items):
    skip = pytest.mark.skip(reason="heavy closure; set BRAIDCONG_HEAVY=1")
    for item in items:
        if "heavy" in item.keywords and not HEAVY:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and not rep.skipped and not rep.failed):
        return
    number, title = mark.args
    entry = item.config._criteria.setdefault(number, {"title": title, "passed": 0, "failed": 0, "skipped": 0})
    if rep.skipped:
        entry["skipped"] += 1
    elif rep.failed:
        entry["failed"] += 1
    elif rep.when == "call":
        entry["passed"] += 1


def pytest_terminal_summary(terminalreporter, config):
    crit = getattr(config, "_criteria", {})
    if not crit:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(crit):
        e = crit[number]
        status = "FAIL" if e["failed"] else ("PASS" if e["passed"] else "SKIP")
        note = f" ({e['skipped']} heavy part(s) skipped)" if e["skipped"] and e["passed"] else ""
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {e['title']}{note}")
