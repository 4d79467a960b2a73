"""Direct evaluation of the two closed-form sums.

One variable:  ``sum_{k=0}^{q-1} (-1)**k * t**(eps_0 + ... + eps_k)``.

Two variables (q even):
``sum_{i=1}^{q/2} eps_{2i-1} * x**A_i * y**B_i`` with
``A_i = sum_{j<i} eps_{2j}`` and
``B_i = (eps_{2i-1} - 1)/2 + sum_{k<i} eps_{2k-1}``.

Both are evaluated in linear time with running partial sums.
"""

from __future__ import annotations

from collections import defaultdict

from .errors import KindError
from .fraction import TwoBridgeParam, epsilon_sequence, epsilon_sequence_with_zero
from .laurent import LaurentPoly1, LaurentPoly2, canonical


def raw_minkus_sum(param: TwoBridgeParam) -> LaurentPoly1:
    acc: dict[tuple[int], int] = defaultdict(int)
    exponent = 0
    for k, e in enumerate(epsilon_sequence_with_zero(param).signs):
        exponent += e
        acc[(exponent,)] += -1 if k % 2 else 1
    return LaurentPoly1._raw(acc)


def minkus_poly(param: TwoBridgeParam) -> LaurentPoly1:
    """Alexander polynomial of a knot, or the reduced one of a link."""
    return canonical(raw_minkus_sum(param))


def _require_link(param: TwoBridgeParam) -> None:
    if not param.is_link:
        raise KindError(f"two-variable polynomial needs q even (a link), got {param}")


def raw_two_variable_sum(param: TwoBridgeParam) -> LaurentPoly2:
    _require_link(param)
    eps = (0,) + epsilon_sequence(param).signs
    acc: dict[tuple[int, int], int] = defaultdict(int)
    x_exp = 0  # sum_{j<i} eps_{2j}
    y_acc = 0  # sum_{k<i} eps_{2k-1}
    for i in range(1, param.q // 2 + 1):
        odd = eps[2 * i - 1]
        acc[(x_exp, (odd - 1) // 2 + y_acc)] += odd
        y_acc += odd
        if 2 * i < param.q:
            x_exp += eps[2 * i]
    return LaurentPoly2._raw(acc)


def two_variable_poly(param: TwoBridgeParam) -> LaurentPoly2:
    """Two-variable Alexander polynomial of the 2-component link K(p/q)."""
    return canonical(raw_two_variable_sum(param))


def linking_degree(param: TwoBridgeParam) -> int:
    """``sum_i eps_{2i-1}``: the two-variable sum evaluated at ``x = y = 1``."""
    _require_link(param)
    return sum(epsilon_sequence(param).signs[0::2])
