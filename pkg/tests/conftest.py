import numpy as np
import pytest

_acceptance = {}


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.rsplit(".", 1)[-1] != "test_acceptance":
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance[item.name] = ("PASS" if rep.passed else "FAIL", doc)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        status, doc = _acceptance[name]
        terminalreporter.write_line(f"{status}  {doc}")
