import os
import random

import pytest

_ACCEPTANCE = []


@pytest.fixture
def rng():
    return random.Random(7919)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


def pure_python_env():
    env = dict(os.environ)
    env["HARDYSUMS_PURE_PYTHON"] = "1"
    return env
