import pytest

from growthbound.enumerator import build_weight_sum


@pytest.fixture(scope="session")
def weights():
    cache = {}

    def get(d, i, workers=1):
        key = (d, i, workers)
        if key not in cache:
            cache[key] = build_weight_sum(d, i, workers)
        return cache[key]

    return get


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
