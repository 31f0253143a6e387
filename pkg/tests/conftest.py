import time

import pytest

from ribbontutte.colouring import ColouredRibbonGraph
from ribbontutte.generate import enumerate_coloured, random_corpus
from ribbontutte.named import THETA_T

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args
    _RESULTS[number] = (title, report.passed, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok, secs = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.1f} s)")


@pytest.fixture(scope="session")
def exhaustive_corpus():
    """All coloured ribbon graphs with at most 2 vertices and 3 edges."""
    return list(enumerate_coloured(2, 3))


@pytest.fixture(scope="session")
def random_graphs():
    """500 seeded graphs with at most 8 edges; half of them connected."""
    return random_corpus(2026, 250, 4, 8) + random_corpus(2027, 250, 4, 8, connected=True)


@pytest.fixture(scope="session")
def corpus(exhaustive_corpus, random_graphs):
    return exhaustive_corpus + random_graphs


@pytest.fixture
def theta_single():
    """ThetaT with discrete vertex classes and one boundary class."""
    return ColouredRibbonGraph(THETA_T, None, [{0}])


@pytest.fixture
def stopwatch():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start

