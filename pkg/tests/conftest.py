import math

import pytest

from oscmoment import MomentQuery, oracle_i1


def b_grid(start=0.1, stop=1.0, step=0.01):
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]


def oracle(n, m, kappa, b):
    return oracle_i1(MomentQuery(n, m, kappa, b)).value_re


@pytest.fixture
def ref():
    return oracle


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
