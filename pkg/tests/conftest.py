"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

import pytest

_RESULTS: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    rep = (yield).get_result()
    if "test_acceptance.py" not in rep.nodeid:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        doc = getattr(item, "function", None).__doc__ or item.name
        _RESULTS[item.name] = ("PASS" if rep.passed else "FAIL", doc.strip().splitlines()[0])


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_RESULTS):
        status, doc = _RESULTS[name]
        terminalreporter.write_line(f"{status}  {doc}")
