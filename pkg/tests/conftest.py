import random
import sys
from fractions import Fraction

import pytest

from newtonbif.poly import Polynomial
from newtonbif.scalars import QQi


def random_poly(rng: random.Random, ring, nterms=4, max_deg=3, complex_coeffs=False, max_num=5):
    terms = {}
    n = len(ring)
    for _ in range(nterms):
        exp = tuple(rng.randint(0, max_deg) for _ in range(n))
        while sum(exp) > max_deg:
            exp = tuple(max(0, e - 1) for e in exp)
        re = Fraction(rng.randint(-max_num, max_num), rng.randint(1, 3))
        im = Fraction(rng.randint(-max_num, max_num), rng.randint(1, 3)) if complex_coeffs else 0
        terms[exp] = QQi(re, im)
    return Polynomial(ring, terms)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def R2():
    return ("x", "y")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
