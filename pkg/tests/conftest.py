import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("zqlab", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("zqlab")

# filled by tests/test_acceptance.py, printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def zeros100():
    from zqlab.zeta import zero_table
    return zero_table(100)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
