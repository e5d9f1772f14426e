import re

import pytest

_CRITERIA = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_criterion_(\d+)", report.nodeid)
    if not match or report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    key = int(match.group(1))
    name = report.nodeid.split("::")[-1]
    _CRITERIA.setdefault(key, []).append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        results = _CRITERIA[key]
        ok = all(outcome == "passed" for _, outcome in results)
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}")
        for name, outcome in results:
            terminalreporter.write_line(f"    {outcome.upper():7s} {name}")


@pytest.fixture
def rng():
    import random

    return random.Random(20240917)
