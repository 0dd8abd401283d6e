import random
from contextlib import contextmanager

import pytest

from kneser_transversal.geometry import PointConfig

ACCEPTANCE_LINES = []


@contextmanager
def criterion(number, description):
    """Record a PASS/FAIL line for one acceptance criterion; failures still propagate."""
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  criterion {number:>2}: {description}")
        raise
    ACCEPTANCE_LINES.append(f"PASS  criterion {number:>2}: {description}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)


@pytest.fixture
def square():
    return PointConfig.from_points([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture
def rng():
    return random.Random(20240917)
