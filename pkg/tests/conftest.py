"""Prints one verdict line per acceptance criterion after its test runs."""

import re
import sys


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    verdict = "PASS" if report.passed else "FAIL"
    sys.stderr.write("criterion %d: %s (%.1f s)\n"
                     % (int(m.group(1)), verdict, report.duration))
