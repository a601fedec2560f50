import itertools

import pytest

from convnum.core import BinarySequence


def all_sequences(n):
    for bits in itertools.product((0, 1), repeat=n):
        yield BinarySequence(bits)


def brute_sigma(bits, i):
    n = len(bits)
    return sum(bits[x] * bits[(x + i) % n] for x in range(n))


@pytest.fixture
def f1_infeasible():
    return BinarySequence((0, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0))


@pytest.fixture
def f1_feasible():
    return BinarySequence((0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0))


# (criterion number, title, passed, seconds, limit) recorded by test_acceptance
ACCEPTANCE_REPORT = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, secs, limit in sorted(ACCEPTANCE_REPORT):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {num:2d}. {title} ({secs:.2f}s, limit {limit:g}s)")
