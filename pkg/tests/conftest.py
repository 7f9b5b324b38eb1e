from itertools import product

import pytest

from amplesets import GroundSet, PartialFamily, SignFamily
from amplesets.ample import family_from_index

SIX_CYCLE = ["+--", "-+-", "--+", "++-", "+-+", "-++"]


def fam(*strings, n=None):
    return SignFamily.from_strings(strings, n=n)


def pfam(*strings, n=None):
    return PartialFamily.from_strings(strings, n=n)


def all_families(n):
    g = GroundSet(n)
    return [family_from_index(g, i) for i in range(1 << (1 << n))]


def all_partial_families(n):
    """Every subset of {+-1,0}^n, as PartialFamily."""
    words = ["".join(w) for w in product("+0-", repeat=n)]
    out = []
    for index in range(1 << len(words)):
        out.append(pfam(*[w for i, w in enumerate(words) if index >> i & 1], n=n))
    return out


def as_tuples(family):
    table = {"+": 1, "-": -1, "0": 0}
    return {tuple(table[c] for c in s if c != ".") for s in family.strings()}


@pytest.fixture
def six_cycle():
    return fam(*SIX_CYCLE)


# one PASS/FAIL line per acceptance criterion, printed at the end of the run
ACCEPTANCE_RESULTS = {}


def pytest_runtest_logreport(report):
    marker = "test_acceptance.py::test_criterion_"
    if marker in report.nodeid and (report.when == "call" or report.outcome != "passed"):
        number = int(report.nodeid.split(marker)[1].split("_")[0])
        if report.when == "call" or number not in ACCEPTANCE_RESULTS:
            ACCEPTANCE_RESULTS[number] = (report.outcome, report.nodeid.split("::")[1])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        outcome, name = ACCEPTANCE_RESULTS[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {name}")
