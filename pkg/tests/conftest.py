import pytest

from detdecomp import GF, QQ

FIELDS = [QQ, GF(5), GF(7)]

_acceptance = {}


@pytest.fixture(params=FIELDS, ids=lambda F: F.tag)
def field(request):
    return request.param


@pytest.fixture
def criterion(request):
    """Record a numbered acceptance criterion's outcome for the summary."""

    def record(number, description):
        _acceptance[request.node.nodeid] = (number, description, request.node)
    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.nodeid in _acceptance and rep.when == "call":
        number, desc, _ = _acceptance[item.nodeid]
        _acceptance[item.nodeid] = (number, desc, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, desc, status in sorted(_acceptance.values(), key=lambda r: r[0]):
        if not isinstance(status, str):
            status = "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {desc}")
