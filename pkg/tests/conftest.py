import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    detail = getattr(item, "acceptance_detail", "")
    _RESULTS[number] = (report.passed, title, report.duration, detail)


@pytest.fixture
def record(request):
    """Attach a one-line detail string to the acceptance summary."""

    def _record(text):
        request.node.acceptance_detail = text

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        passed, title, duration, detail = _RESULTS[number]
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] criterion {number:>2}: {title} ({duration:.2f} s)"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
