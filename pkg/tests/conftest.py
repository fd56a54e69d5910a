import pytest

from fsmrecon import Fsm, build_printer
from fsmrecon.cli import printer_case

ACCEPTANCE_RESULTS = []


@pytest.fixture
def fig1():
    """Two states, one event: A-1->B and B-1->B."""
    return Fsm(["A", "B"], ["1"], {("A", "1"): "B", ("B", "1"): "B"})


@pytest.fixture
def fig2():
    return Fsm(
        ["A", "B", "C"],
        ["1", "2"],
        {
            ("A", "1"): "B",
            ("A", "2"): "A",
            ("B", "1"): "B",
            ("B", "2"): "C",
            ("C", "1"): "C",
            ("C", "2"): "C",
        },
    )


@pytest.fixture
def connected3():
    """Every state reaches every other: event x leads to state X."""
    return Fsm(["A", "B", "C"], ["a", "b", "c"], {(q, e): e.upper() for q in "ABC" for e in "abc"})


@pytest.fixture(scope="session")
def printer2():
    return build_printer(2)


@pytest.fixture(scope="session")
def printer_evidence():
    return printer_case(2)[1]


@pytest.fixture
def acceptance():
    def record(number, title, passed, detail=""):
        ACCEPTANCE_RESULTS.append((number, title, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_RESULTS):
        mark = "PASS" if passed else "FAIL"
        line = f"[{mark}] AC{number}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
