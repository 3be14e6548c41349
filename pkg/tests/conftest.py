import time
from pathlib import Path

import pytest
from hypothesis import settings

from persneg.textnorm import default_suffix_rules

FIXTURES = Path(__file__).parent / "fixtures"
SUITE_TIME_LIMIT = 30.0

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def rules():
    return default_suffix_rules()


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_sessionstart(session):
    session.config._persneg_t0 = time.perf_counter()


def _acceptance_rows(stats):
    rows = {}
    for outcome in ("passed", "failed", "error"):
        for rep in stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" not in nodeid:
                continue
            if rep.when == "call" or rep.outcome != "passed":
                rows[nodeid] = "PASS" if rep.outcome == "passed" else "FAIL"
    return rows


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = _acceptance_rows(terminalreporter.stats)
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(rows):
        terminalreporter.write_line(f"{rows[nodeid]}  {nodeid.split('::', 1)[1]}")
    elapsed = time.perf_counter() - config._persneg_t0
    verdict = "PASS" if elapsed < SUITE_TIME_LIMIT else "FAIL"
    terminalreporter.write_line(f"{verdict}  suite runtime {elapsed:.1f} s (limit {SUITE_TIME_LIMIT:.0f} s)")


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - session.config._persneg_t0
    if elapsed >= SUITE_TIME_LIMIT and exitstatus == 0:
        session.exitstatus = 1
