import pytest
from hypothesis import given, strategies as st

from twobridge.errors import DomainError, ZeroPolynomial
from twobridge.laurent import (
    T,
    X,
    Y,
    LaurentPoly1,
    LaurentPoly2,
    canonical,
    coefficient_profile,
    eq_up_to_units,
    evaluate,
    invert_variables,
    is_trapezoidal,
    normalize,
    substitute_diagonal,
)
from twobridge.polystr import parse_poly


def dense_convolve(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


small = st.integers(min_value=-5, max_value=5)
poly1 = st.dictionaries(st.integers(-4, 4), small, max_size=5).map(LaurentPoly1)
poly2 = st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), small, max_size=5).map(LaurentPoly2)
nonzero1 = poly1.filter(bool)
nonzero2 = poly2.filter(bool)


def test_zero_coefficients_pruned_and_sorted():
    p = LaurentPoly1({3: 1, -1: 2, 0: 0, 1: -4})
    assert p.terms() == [((-1,), 2), ((1,), -4), ((3,), 1)]
    q = LaurentPoly2({(1, 0): 1, (0, 5): 2, (0, 1): 0})
    assert [e for e, _ in q] == [(0, 5), (1, 0)]


def test_ring_examples():
    assert (1 - T) * (1 + T) == 1 - T**2
    assert (X - 1) * 1 == X - 1
    quartic = LaurentPoly1.from_dense([1, -2, 3, -2, 1])
    assert (T - 1) * quartic == LaurentPoly1.from_dense([-1, 3, -5, 5, -3, 1])
    assert LaurentPoly1.from_dense(dense_convolve([-1, 1], [1, -2, 3, -2, 1])) == (T - 1) * quartic


def test_mixed_variable_counts_rejected():
    with pytest.raises(TypeError):
        T + X


@given(
    st.lists(small, min_size=1, max_size=6),
    st.lists(small, min_size=1, max_size=6),
    st.integers(-3, 3),
    st.integers(-3, 3),
)
def test_multiply_matches_convolution(a, b, sa, sb):
    pa = LaurentPoly1.from_dense(a, sa)
    pb = LaurentPoly1.from_dense(b, sb)
    assert pa * pb == LaurentPoly1.from_dense(dense_convolve(a, b), sa + sb)


@given(poly2, poly2, poly2)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a - a == LaurentPoly2.zero()


def test_normalize_examples():
    messy = parse_poly("t^-1 - 3 + 5t - 3t^2 + t^3")
    nf = normalize(messy)
    assert nf.normal == parse_poly("1 - 3t + 5t^2 - 3t^3 + t^4")
    assert nf.shift == (-1,) and nf.sign == 1

    nf = normalize(-X)
    assert nf.normal == LaurentPoly2.constant(1)
    assert nf.unit == -X

    printed = parse_poly("x^2 y^2 - x^2 y - x y^2 + 3 x y - x - y + 1")
    shuffled = parse_poly("3 x y + x^2 y^2 + 1 - x y^2 - x^2 y - y - x")
    assert normalize(shuffled).normal == printed
    assert normalize(printed).normal == printed


def test_normalize_zero():
    with pytest.raises(ZeroPolynomial):
        normalize(LaurentPoly1.zero())
    with pytest.raises(ZeroPolynomial):
        coefficient_profile(LaurentPoly1.zero())


@given(nonzero1)
def test_normal_form_1var_invariants(p):
    nf = normalize(p)
    assert nf.normal.min_exponents() == (0,)
    assert nf.normal.coefficient(0) > 0
    assert nf.unit * nf.normal == p
    assert canonical(nf.normal) == nf.normal


@given(nonzero2)
def test_normal_form_2var_invariants(p):
    nf = normalize(p)
    assert nf.normal.min_exponents() == (0, 0)
    assert nf.normal.terms()[0][1] > 0
    assert nf.unit * nf.normal == p
    assert canonical(nf.normal) == nf.normal


@given(nonzero1, st.integers(-6, 6), st.sampled_from([1, -1]))
def test_unit_multiples_equivalent_1var(p, k, s):
    assert eq_up_to_units(p, LaurentPoly1.monomial(k, s) * p)


@given(nonzero2, st.integers(-4, 4), st.integers(-4, 4), st.sampled_from([1, -1]))
def test_unit_multiples_equivalent_2var(p, a, b, s):
    assert eq_up_to_units(p, LaurentPoly2.monomial((a, b), s) * p)


@given(poly1, poly1, poly1)
def test_eq_up_to_units_is_equivalence(a, b, c):
    assert eq_up_to_units(a, a)
    assert eq_up_to_units(a, b) == eq_up_to_units(b, a)
    if eq_up_to_units(a, b) and eq_up_to_units(b, c):
        assert eq_up_to_units(a, c)


def test_eq_up_to_units_examples():
    assert eq_up_to_units(T - T**2, 1 - T)
    assert eq_up_to_units(
        parse_poly("1 - 3t + 5t^2 - 3t^3 + t^4"), parse_poly("t^-2 - 3t^-1 + 5 - 3t + t^2")
    )
    assert not eq_up_to_units(1 - T, 1 + T)
    assert eq_up_to_units(LaurentPoly1.zero(), LaurentPoly1.zero())
    assert not eq_up_to_units(LaurentPoly1.zero(), LaurentPoly1.constant(1))


def test_substitute_diagonal_examples():
    link = parse_poly("x^2 y^2 - x^2 y - x y^2 + 3 x y - x - y + 1")
    assert substitute_diagonal(link) == LaurentPoly1.from_dense([1, -2, 3, -2, 1])
    assert substitute_diagonal(LaurentPoly2.constant(1)) == LaurentPoly1.constant(1)
    assert substitute_diagonal(X * Y + 1) == T**2 + 1


@given(poly2)
def test_substitute_diagonal_termwise(p):
    expected = LaurentPoly1.zero()
    for (i, j), c in p:
        expected = expected + LaurentPoly1.monomial(i + j, c)
    assert substitute_diagonal(p) == expected


def test_invert_variables_examples():
    p = parse_poly("1 - 3t + 5t^2 - 3t^3 + t^4")
    assert invert_variables(p) == parse_poly("1 - 3t^-1 + 5t^-2 - 3t^-3 + t^-4")
    assert invert_variables(LaurentPoly1.constant(7)) == 7
    assert invert_variables(X * Y) == LaurentPoly2.monomial((-1, -1))


@given(poly2)
def test_invert_is_involution(p):
    assert invert_variables(invert_variables(p)) == p


def test_evaluate_examples():
    assert evaluate(parse_poly("1 - 3t + 5t^2 - 3t^3 + t^4"), 1) == 1
    assert evaluate(parse_poly("x^2 y^2 - x^2 y - x y^2 + 3 x y - x - y + 1"), (1, 1)) == 1
    assert evaluate(LaurentPoly2.constant(1), (7, -3)) == 1
    assert evaluate(1 + 2 * T + T**3, 2) == 13
    assert evaluate(LaurentPoly1.monomial(-3), -1) == -1
    with pytest.raises(DomainError):
        evaluate(LaurentPoly1.monomial(-1), 2)


@given(poly2)
def test_evaluate_at_ones_sums_coefficients(p):
    assert evaluate(p, (1, 1)) == sum(c for _, c in p)


def test_coefficient_profile():
    assert coefficient_profile(parse_poly("t^-2 - 3t^-1 + 5 - 3t + t^2")) == [1, -3, 5, -3, 1]
    assert coefficient_profile(parse_poly("2 - 3t + 2t^2")) == [2, -3, 2]
    assert coefficient_profile(LaurentPoly1.constant(1)) == [1]
    assert coefficient_profile(-T**3 + T**5) == [1, 0, -1]


@pytest.mark.parametrize(
    "coeffs, expected",
    [
        ([1, -3, 5, -3, 1], True),
        ([2, -3, 2], True),
        ([1, -1, 2, -1, 3], False),
        ([1], True),
        ([1, -1, 1, -1], True),
        ([1, -2, 2, -2, 1], True),
        ([1, 0, 1], False),
        ([1, 3, 1], False),
        ([3, -1, 3], False),
        ([1, -2, 3, -3], False),
    ],
)
def test_is_trapezoidal(coeffs, expected):
    assert is_trapezoidal(LaurentPoly1.from_dense(coeffs)) is expected


def test_serialization_roundtrip():
    p = parse_poly("x^2 y^2 - x^2 y - x y^2 + 3 x y - x - y + 1")
    data = p.to_terms()
    assert data[0] == [[0, 0], 1]
    assert data == sorted(data)
    assert LaurentPoly2.from_terms(data) == p
