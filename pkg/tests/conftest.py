import pytest

from spaf.graph import Graph


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")
    config._acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        item.config._acceptance.append((number, title, report.outcome))


def pytest_terminal_summary(terminalreporter, config):
    rows = sorted(config._acceptance)
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in rows:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  criterion {number}: {title}")


@pytest.fixture
def single_edge():
    return Graph.from_edges(2, [(1, 2, 5)])


@pytest.fixture
def diamond():
    # direct narrow edge vs. a wider two-hop detour
    return Graph.from_edges(3, [(1, 2, 2), (1, 3, 9), (3, 2, 9)])


@pytest.fixture
def two_cycle():
    return Graph.from_edges(2, [(1, 2, 3), (2, 1, 7)])
