import pytest

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        notes = [v for k, v in item.user_properties if k == "observation"]
        label = next((v for k, v in item.user_properties if k == "status"), None)
        _criteria[marker.args[0]] = (marker.args[1], rep.outcome, notes, label)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome, notes, label = _criteria[number]
        status = "FAIL" if outcome != "passed" else (label or "PASS")
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
        for note in notes:
            terminalreporter.write_line(f"               observation: {note}")
