import re

_CRITERION = re.compile(r"test_criterion_(\d+)([a-z]?)_")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call" and outcome != "error":
                continue
            m = _CRITERION.search(rep.nodeid)
            if m and "test_acceptance" in rep.nodeid:
                rows.append((int(m.group(1)), m.group(2), outcome, rep.nodeid.split("::")[-1]))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for num, sub, outcome, name in sorted(rows):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {num}{sub}: {name}")
