"""Acceptance bookkeeping: tests marked ``criterion(k)`` are aggregated per criterion
and one pass/fail line per criterion is printed at the end of the run."""

from __future__ import annotations

import os
from collections import defaultdict

import pytest

# criterion -> (description, wall-clock budget in seconds or None)
CRITERIA = {
    1: ("chain table n=3..13, f=u+u^2", 60),
    2: ("cycle table n=3..10, f=u+u^2", 30),
    3: ("D_n and leg / fork-leg family tables", 300),
    4: ("trees on 4-8 vertices", 120),
    5: ("K5, K5-e, K5-2e and double-edge square tables", 120),
    6: ("K4 stratification with mask {2,3}", None),
    7: ("K3+e stratification including 3c=4b^2", None),
    8: ("K5, f=u+u^4 log-concavity violation 81 < 164", None),
    9: ("graded oracle equivalence on corpus graphs with <= 12 edges", 120),
    10: ("seeded property suites", 300),
    11: ("closed-form conjecture report (non-blocking)", None),
}

_outcomes: dict[int, list[tuple[str, bool, float]]] = defaultdict(list)
# informational lines appended by tests, printed after the criteria
REPORT_LINES: list[str] = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("ZONOTOPAL_STRETCH"):
        return
    skip = pytest.mark.skip(reason="stretch tier; set ZONOTOPAL_STRETCH=1")
    for item in items:
        if "stretch" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "criterion", None)
    if crit is not None:
        _outcomes[crit].append((report.nodeid, report.passed, report.duration))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k, (desc, budget) in CRITERIA.items():
        runs = _outcomes.get(k)
        if not runs:
            tr.write_line(f"criterion {k:>2}: NOT RUN  {desc}")
            continue
        elapsed = sum(d for _, _, d in runs)
        failed = [nid for nid, ok, _ in runs if not ok]
        over = budget is not None and elapsed > budget
        status = "PASS" if not failed and not over else "FAIL"
        limit = f" / {budget} s" if budget is not None else ""
        detail = f"{len(runs) - len(failed)}/{len(runs)} tests, {elapsed:.1f} s{limit}"
        if over:
            detail += ", over budget"
        tr.write_line(f"criterion {k:>2}: {status}  {desc}  [{detail}]")
        for nid in failed:
            tr.write_line(f"    failed: {nid}")
    if REPORT_LINES:
        tr.section("conjecture report (informational)")
        for line in REPORT_LINES:
            tr.write_line(line)
