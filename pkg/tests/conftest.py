import pytest

from nadyn.config import settings


@pytest.fixture
def restore_settings():
    saved = dict(vars(settings))
    yield settings
    for k, v in saved.items():
        setattr(settings, k, v)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(RESULTS, key=lambda r: r.number):
        terminalreporter.write_line(r.line())
    passed = sum(r.passed for r in RESULTS)
    terminalreporter.write_line(f"{passed}/{len(RESULTS)} criteria passed")
