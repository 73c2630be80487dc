"""Shared test configuration.

The acceptance module's tests are named test_cNN_*; their outcomes are
collected here and replayed as one PASS/FAIL line per criterion in the
terminal summary, so the acceptance verdict is readable at a glance even
in a long -v run.
"""

import re

_ACCEPTANCE = {}
_PATTERN = re.compile(r"test_acceptance\.py::(test_c(\d+)_\w+)")


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    name, num = m.group(1), int(m.group(2))
    if report.when == "call":
        _ACCEPTANCE[num] = (report.outcome, name)
    elif report.when == "setup" and report.outcome != "passed":
        _ACCEPTANCE[num] = (report.outcome, name)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        outcome, name = _ACCEPTANCE[num]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:02d}: {verdict}  ({name})")
