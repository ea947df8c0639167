"""Shared pytest hooks.

The acceptance tests append one verdict line each; printing them from a
terminal-summary hook keeps them visible under output capture.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance scorecard")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
