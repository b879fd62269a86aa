import pytest
from sympy import primerange

_ACCEPTANCE_LINES = []


def naive_fib(n, m):
    """(F_n, F_{n+1}) mod m by plain iteration."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, (a + b) % m
    return a % m, b % m


def naive_pisano(m):
    if m == 1:
        return 1
    a, b, n = 0, 1, 0
    while True:
        a, b = b, (a + b) % m
        n += 1
        if (a, b) == (0, 1):
            return n


def odd_primes(lo, hi):
    """Primes in [lo, hi) other than 2 and 5."""
    return [p for p in primerange(lo, hi) if p not in (2, 5)]


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
