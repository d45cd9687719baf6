import random
from itertools import product

import pytest

from acceptance_log import RESULTS
from cnforge.curve import INFINITY, CurveParams, Point, add, scalar_mul, two_torsion

C6 = CurveParams(6)
C7 = CurveParams(7)
C840 = CurveParams(840)


def combos(c, gens, span):
    """All sum(a_i * G_i) + T for |a_i| <= span and T in the 2-torsion (or O)."""
    multiples = [[scalar_mul(c, a, g) for a in range(-span, span + 1)] for g in gens]
    out = []
    for parts in product(*multiples):
        acc = INFINITY
        for p in parts:
            acc = add(c, acc, p, check=False)
        for t in [INFINITY] + two_torsion(c):
            out.append(add(c, acc, t, check=False))
    return out


@pytest.fixture(scope="session")
def pool840():
    return combos(C840, [Point(1176, 28224), Point(1960, 78400)], 3)


@pytest.fixture(scope="session")
def pool6():
    return combos(C6, [Point(18, 72)], 8)


@pytest.fixture
def rng():
    return random.Random(20260916)


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
