from __future__ import annotations

import util


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if util.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in util.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
