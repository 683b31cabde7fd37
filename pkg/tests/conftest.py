import random

import pytest

from incoalg import GF, QQ, generate_poset

_acceptance_results = {}


def corpus():
    """Small posets covering chains, antichains, lattices and random shapes."""
    return [
        ("chain3", generate_poset("chain", 3)),
        ("chain4", generate_poset("chain", 4)),
        ("antichain3", generate_poset("antichain", 3)),
        ("boolean2", generate_poset("boolean", 2)),
        ("boolean3", generate_poset("boolean", 3)),
        ("random5", generate_poset("random", 5, 0.5, seed=2)),
        ("random6", generate_poset("random", 6, 0.4, seed=3)),
        ("random7", generate_poset("random", 7, 0.3, seed=1)),
    ]


CORPUS = corpus()
FIELDS = [QQ, GF(5)]


@pytest.fixture(params=CORPUS, ids=[name for name, _ in CORPUS])
def poset(request):
    return request.param[1]


@pytest.fixture(params=FIELDS, ids=str)
def field(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for mark in getattr(report, "acceptance_marks", ()):
        prev = _acceptance_results.get(mark, True)
        _acceptance_results[mark] = prev and report.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    report.acceptance_marks = [m.args[0] for m in item.iter_markers("acceptance")]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance_results):
        status = "PASS" if _acceptance_results[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}")
