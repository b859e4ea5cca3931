import _acceptance_log


def pytest_terminal_summary(terminalreporter):
    if _acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_log.LINES):
            terminalreporter.write_line(line)
