import random

import pytest

from forcing_lab.audit import audit_graph
from forcing_lab.graph import enumerate_connected_labeled_graphs


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def connected_upto6():
    """Every connected labelled graph with 2 <= n <= 6."""
    return [g for n in range(2, 7) for g in enumerate_connected_labeled_graphs(n)]


@pytest.fixture(scope="session")
def audited_upto6(connected_upto6):
    """(graph, report) for the whole n <= 6 space, solved once per session."""
    return [(g, audit_graph(g)) for g in connected_upto6]


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion, with its recorded detail."""
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call" and outcome != "error":
                continue
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props:
                rows.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL", props.get("detail", "")))
    if rows:
        terminalreporter.section("acceptance criteria")
        for num, verdict, detail in sorted(rows):
            terminalreporter.write_line(f"criterion {num:>2}: {verdict}  {detail}")
