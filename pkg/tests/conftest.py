import re

import pytest

# criterion number -> (description, passed so far)
_CRITERIA: dict[int, tuple[str, bool]] = {}
_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    if report.when != "call" and not report.failed:
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    num = int(m.group(1))
    _, ok = _CRITERIA.get(num, (doc, True))
    _CRITERIA[num] = (doc, ok and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        doc, ok = _CRITERIA[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num}: {doc}")
