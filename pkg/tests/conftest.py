import re

import pytest

from skewsol.braces import enumerate_braces
from skewsol.solutions import enumerate_solutions


@pytest.fixture(scope="session")
def solution_corpus():
    out = []
    for n in range(1, 4):
        out.extend(enumerate_solutions(n, "all"))
    out.extend(enumerate_solutions(4, "involutive"))
    return out


@pytest.fixture(scope="session")
def brace_corpus():
    return [B for n in range(1, 7) for B in enumerate_braces(n)]


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", nodeid)
            if m and rep.when == "call" or (m and outcome == "error"):
                lines.append((int(m.group(1)), m.group(2), outcome, rep.duration))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for k, name, outcome, dur in sorted(lines):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d} {status}  {name}  ({dur:.2f}s)")
