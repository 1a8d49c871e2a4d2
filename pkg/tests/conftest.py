import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

CRITERIA = range(1, 8)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None:
        return
    terminalreporter.section("acceptance criteria")
    for k in CRITERIA:
        terminalreporter.write_line(mod.RESULTS.get(k, f"CRITERION {k} [NOT RUN] deselected, or crashed before reporting"))
