"""Collects acceptance scorecard lines and replays them after the run.

Tests append to SCORECARD; printing at terminal-summary time is the only way
the lines survive pytest's fd-level capture on passing tests.
"""

SCORECARD = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if SCORECARD:
        terminalreporter.section("acceptance scorecard")
        for line in SCORECARD:
            terminalreporter.write_line(line)
