"""Shared pytest plumbing.

Acceptance tests append their verdict lines to AC_LINES; the terminal-summary
hook echoes them after the run so they survive output capture and always
appear in the transcript.
"""

AC_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if AC_LINES:
        terminalreporter.section("acceptance criteria")
        for line in AC_LINES:
            terminalreporter.line(line)
