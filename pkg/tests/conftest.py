import pytest

from amiforge.arith import build_sigma_sieve

import acceptance_log


@pytest.fixture(scope="session")
def sieve_1k():
    return build_sigma_sieve(1000)


@pytest.fixture(scope="session")
def sieve_10k():
    return build_sigma_sieve(10**4)


@pytest.fixture(scope="session")
def sieve_100k():
    return build_sigma_sieve(10**5)


def pytest_terminal_summary(terminalreporter):
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.line(line)
