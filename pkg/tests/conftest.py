import pytest

from halftrans.construction import build


def definition_edges(n, a):
    """Edge set straight from the adjacency rules, on (i, j) tuples."""
    b = a * a % n
    edges = set()
    for i in range(n):
        for j in range(3):
            for t in ((a * i + 1) % n, (a * i - 1) % n):
                edges.add(frozenset({(i, j), (t, (j - 1) % 3)}))
            for t in ((b * i + b) % n, (b * i - b) % n):
                edges.add(frozenset({(i, j), (t, (j + 1) % 3)}))
    return edges


@pytest.fixture(scope="session")
def holt():
    return build(9, 4)


@pytest.fixture(scope="session")
def g72():
    return build(7, 2)


@pytest.fixture(scope="session")
def g149():
    return build(14, 9)


# acceptance criteria report: one line per criterion at the end of the run

_criteria: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _criteria[name] = ("PASS" if report.passed else "FAIL", report.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split("_")[2])):
        status, _ = _criteria[name]
        terminalreporter.write_line(f"{status}  {name}")
