from collections import Counter
from fractions import Fraction

import pytest

from conftest import brute_params, eq1_oracle, exact_eps
from twobridge.errors import KindError
from twobridge.fraction import new_param
from twobridge.laurent import LaurentPoly1, canonical
from twobridge.polystr import parse_poly
from twobridge.walks import (
    poly_from_1d_crossings,
    poly_from_1d_visits,
    poly_from_2d_visits,
    walk_1d_hartley,
    walk_1d_minkus,
    walk_2d,
)


def crossing_oracle(positions):
    """Intersect every step with every half-integer in range, using rationals."""
    lo, hi = min(positions), max(positions)
    halves = [Fraction(2 * n + 1, 2) for n in range(lo - 1, hi + 1)]
    counts = Counter()
    for a, b in zip(positions, positions[1:]):
        for h in halves:
            if min(a, b) < h < max(a, b):
                counts[h] += 1
    return counts


@pytest.mark.parametrize(
    "p, q, visits",
    [
        (5, 13, {-2: 1, -1: 3, 0: 5, 1: 3, 2: 1}),
        (1, 2, {0: 1, 1: 1}),
        (1, 3, {0: 1, 1: 1, 2: 1}),
    ],
)
def test_minkus_visits(p, q, visits):
    trace = walk_1d_minkus(new_param(p, q))
    assert dict(trace.visit_counts) == visits
    assert trace.positions[0] == 0
    assert all(b - a == s for a, b, s in zip(trace.positions, trace.positions[1:], trace.steps))


@pytest.mark.parametrize(
    "p, q, text",
    [(5, 13, "1 - 3t + 5t^2 - 3t^3 + t^4"), (1, 3, "1 - t + t^2"), (1, 2, "1 - t")],
)
def test_poly_from_visits(p, q, text):
    poly = poly_from_1d_visits(walk_1d_minkus(new_param(p, q)))
    assert poly == parse_poly(text)
    assert poly == canonical(eq1_oracle(p, q))


def test_hartley_crossings_3_7():
    trace = walk_1d_hartley(new_param(3, 7))
    assert dict(trace.crossing_counts) == {-1: 2, 1: 3, 3: 2}
    assert poly_from_1d_crossings(trace) == parse_poly("2 - 3t + 2t^2")


def test_hartley_small_cases():
    trace = walk_1d_hartley(new_param(1, 3))
    assert dict(trace.crossing_counts) == {1: 1, 3: 1, 5: 1}
    assert poly_from_1d_crossings(trace) == parse_poly("1 - t + t^2")
    assert poly_from_1d_crossings(walk_1d_hartley(new_param(5, 13))) == parse_poly("1 - 3t + 5t^2 - 3t^3 + t^4")


def test_hopf_shifted_reading():
    """Of the two candidate shifted sequences for 1/2, only ++ reproduces 1 - t."""
    trace = walk_1d_hartley(new_param(1, 2))
    assert trace.steps == (1, 1)
    assert poly_from_1d_crossings(trace) == 1 - LaurentPoly1.monomial(1)
    # the +- reading crosses 1/2 twice: 2, not the Hopf polynomial
    back_and_forth = crossing_oracle([0, 1, 0])
    assert dict(back_and_forth) == {Fraction(1, 2): 2}


def test_crossings_match_interval_oracle():
    for p, q in brute_params(80):
        trace = walk_1d_hartley(new_param(p, q))
        oracle = crossing_oracle(trace.positions)
        assert {Fraction(k, 2): c for k, c in trace.crossing_counts.items()} == dict(oracle)


def test_crossings_need_hartley_trace():
    with pytest.raises(ValueError):
        poly_from_1d_crossings(walk_1d_minkus(new_param(3, 7)))


def test_walk_2d_5_18():
    trace = walk_2d(new_param(5, 18))
    assert trace.steps[:2] == ((1, 1), (-1, 0))
    assert dict(trace.visit_counts) == {
        (0, 0): 3, (1, 1): 1, (0, 1): 1, (-1, 0): 1, (1, 0): 1, (0, -1): 1, (-1, -1): 1,
    }
    assert len(trace.positions) == 9
    assert poly_from_2d_visits(trace) == parse_poly("x^2 y^2 - x^2 y - x y^2 + 3 x y - x - y + 1")


def test_walk_2d_small():
    hopf = walk_2d(new_param(1, 2))
    assert hopf.steps == () and dict(hopf.visit_counts) == {(0, 0): 1}
    assert poly_from_2d_visits(hopf) == parse_poly("1", nvars=2)
    assert poly_from_2d_visits(walk_2d(new_param(3, 8))) == parse_poly("1 - x - y + x y")


def test_walk_2d_rejects_knots():
    with pytest.raises(KindError):
        walk_2d(new_param(5, 13))


def test_walk_2d_steps_from_rational_signs():
    for p, q in brute_params(120):
        if q % 2:
            continue
        e = [None] + [exact_eps(p, q, i) for i in range(1, q)]
        expected = []
        for m in range(1, (q - 2) // 2 + 1):
            if e[2 * m - 1] != e[2 * m + 1]:
                dy = 0
            else:
                dy = 1 if e[2 * m - 1] == 1 else -1
            expected.append((e[2 * m], dy))
        assert walk_2d(new_param(p, q)).steps == tuple(expected)


def test_bookkeeping_exhaustive():
    for p, q in brute_params(200):
        param = new_param(p, q)
        minkus = walk_1d_minkus(param)
        assert len(minkus.steps) == q - 1
        assert sum(minkus.visit_counts.values()) == q
        keys = sorted(minkus.visit_counts)
        assert keys == list(range(keys[0], keys[-1] + 1))
        assert len(walk_1d_hartley(param).steps) == q
        if q % 2 == 0:
            lattice = walk_2d(param)
            assert len(lattice.steps) == (q - 2) // 2
            assert len(lattice.positions) == q // 2
