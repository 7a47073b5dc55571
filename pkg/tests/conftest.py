import pytest

from scriptid import ucd

ACCEPTANCE_RESULTS: dict[str, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def table():
    return ucd.default_table()


@pytest.fixture(scope="session")
def scripts_text():
    return ucd.read_bundled(ucd.SCRIPTS_FILE)


@pytest.fixture(scope="session")
def aliases_text():
    return ucd.read_bundled(ucd.ALIASES_FILE)


@pytest.fixture
def criterion(request):
    """Record an acceptance criterion's outcome for the terminal summary."""
    marker = request.node.get_closest_marker("criterion")
    name = f"criterion {marker.args[0]:>2}" if marker else request.node.name
    notes: list[str] = []
    yield notes
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    ACCEPTANCE_RESULTS[name] = (status, "; ".join(notes))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        status, note = ACCEPTANCE_RESULTS[name]
        line = f"{status}  {name}"
        if note:
            line += f"  ({note})"
        terminalreporter.write_line(line)
