import pytest

from maxlottery import Profile

ACCEPTANCE_LINES = []


@pytest.fixture
def p_cyc():
    return Profile.from_rankings("abc", ["a > b > c", "b > c > a", "c > a > b"])


@pytest.fixture
def p_cw():
    return Profile.from_rankings("abc", [(2, "a > b > c"), (1, "b > c > a")])


@pytest.fixture
def p_eff4():
    return Profile.from_rankings("abcd", ["a > b > c > d", "b > c > a > d", "c > a > b > d"])


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    criterion = dict(report.user_properties).get("criterion")
    if criterion is not None:
        status = "PASS" if report.passed else "FAIL"
        name = report.nodeid.split("::")[-1]
        ACCEPTANCE_LINES.append(f"criterion {criterion:>2}: {status}  {name}")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
