ACCEPTANCE_FILE = "test_acceptance.py"


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if ACCEPTANCE_FILE in getattr(rep, "nodeid", "") and (rep.when == "call" or outcome == "error"):
                lines.append((rep.nodeid, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for nodeid, status in sorted(lines):
            terminalreporter.write_line(f"{status}  {nodeid.split('::')[-1]}")
