import pytest

_RESULTS = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = dict(report.user_properties).get("criterion")
    if crit is not None:
        props = dict(report.user_properties)
        prev = _RESULTS.get(crit)
        outcome = report.outcome
        dur = report.duration
        if prev is not None:
            outcome = prev[0] if prev[0] != "passed" else outcome
            dur += prev[2]
        _RESULTS[crit] = (outcome, props.get("title", ""), dur)


@pytest.fixture(autouse=True)
def _criterion_props(request, record_property):
    m = request.node.get_closest_marker("criterion")
    if m is not None:
        record_property("criterion", m.args[0])
        record_property("title", m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_RESULTS):
        outcome, title, dur = _RESULTS[crit]
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {crit:2d}: {mark}  ({dur:.2f}s)  {title}")
