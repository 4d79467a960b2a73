from __future__ import annotations

from fractions import Fraction
from math import floor, gcd

import pytest

from twobridge.laurent import LaurentPoly1

ACCEPTANCE_LINES: list[str] = []


def exact_eps(p: int, q: int, i: int) -> int:
    """(-1)**floor(i*p/q) through rational arithmetic, independent of the library."""
    return -1 if floor(Fraction(i * p, q)) % 2 else 1


def brute_params(qmax: int):
    return [(p, q) for q in range(2, qmax + 1) for p in range(1, q) if p % 2 == 1 and gcd(p, q) == 1]


def eq1_oracle(p: int, q: int) -> LaurentPoly1:
    """Direct transcription of the one-variable alternating sum, with rational floors."""
    coeffs: dict[int, int] = {}
    for k in range(q):
        e = sum(exact_eps(p, q, i) for i in range(k + 1))
        coeffs[e] = coeffs.get(e, 0) + (-1) ** k
    return LaurentPoly1(coeffs)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
