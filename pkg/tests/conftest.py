from fractions import Fraction

import pytest

from transcend.okada import PeriodicFunction, nullspace_search
from transcend.poly import from_linear_factors, parse_polynomial

F = Fraction

Q4_NUM = parse_polynomial("16*n^2+12*n-1")
Q4_DEN = from_linear_factors([(4, 1), (4, 2), (4, 3), (4, 4)])
Q6_NUM = parse_polynomial("36*n^2+36*n-1")
Q6_DEN = from_linear_factors([(6, 1), (6, 2), (6, 4), (6, 5)])

Q4_F = PeriodicFunction(4, [F(-1, 2), F(3, 2), F(-1, 2), F(-1, 2)])
Q6_F = PeriodicFunction(6, [F(-1, 2), F(3, 2), 0, F(-3, 2), F(1, 2), 0])


def _corpus():
    fs = [
        Q4_F,
        Q6_F,
        PeriodicFunction(4, [1, -3, 1, 1]),
        PeriodicFunction(2, [1, -1]),
        PeriodicFunction(3, [1, -1, 0]),
        PeriodicFunction(3, [F(1, 2), -1, F(1, 2)]),
        PeriodicFunction(4, [F(8, 3), -4, 0, F(4, 3)]),
        PeriodicFunction(6, [1, 1, 1, -1, -1, -1]),
        PeriodicFunction(5, [1, 2, -3, F(1, 2), F(-1, 2)]),
        PeriodicFunction(8, [1, 0, -1, 0, 2, 0, -2, 0]),
        PeriodicFunction(12, [1, -1, 2, -2, 3, -3, 0, 0, 1, -1, F(1, 3), F(-1, 3)]),
    ]
    # full vanishing spaces, including multi-prime moduli
    for q in (4, 6, 8, 9, 10, 12, 15, 30):
        for b in nullspace_search(q, range(1, q + 1)):
            fs.append(PeriodicFunction(q, b))
    return fs


CORPUS = _corpus()


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
