def pytest_terminal_summary(terminalreporter):
    from tests_acceptance_report import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for num in sorted(LINES):
            line = LINES[num]
            terminalreporter.write_line(line)
