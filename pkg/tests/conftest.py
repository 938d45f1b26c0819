import re

import pytest

from alexentropy.knotdata import builtin_table

_acceptance = []


@pytest.fixture(scope="session")
def table():
    return builtin_table()


@pytest.fixture(scope="session")
def polys(table):
    return {rec.name: rec.poly for rec in table}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    m = re.search(r"test_criterion_(\d+)_(\w+)", report.nodeid)
    if m:
        _acceptance.append((int(m.group(1)), m.group(2), report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, outcome, secs in sorted(_acceptance):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {name:<40} {verdict}  ({secs:.2f} s)")
