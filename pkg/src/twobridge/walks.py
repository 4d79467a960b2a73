"""Walks on the integers and on the square lattice that read off Alexander
polynomials from visit (or crossing) counts.

Walks always start at 0 (resp. (0, 0)).  Half-integers ``h`` are stored as
the odd integer ``2*h``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .errors import KindError
from .fraction import TwoBridgeParam, epsilon_sequence, shifted_sign_sequence
from .laurent import LaurentPoly1, LaurentPoly2, canonical


@dataclass(frozen=True)
class WalkTrace1D:
    steps: tuple[int, ...]
    positions: tuple[int, ...]
    visit_counts: Mapping[int, int]
    # doubled half-integer -> count; only filled by the shifted-sign walk
    crossing_counts: Mapping[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class WalkTrace2D:
    steps: tuple[tuple[int, int], ...]
    positions: tuple[tuple[int, int], ...]
    visit_counts: Mapping[tuple[int, int], int]


def _run_1d(steps) -> tuple[tuple[int, ...], dict[int, int]]:
    pos = 0
    positions = [0]
    for s in steps:
        pos += s
        positions.append(pos)
    counts = Counter(positions)
    return tuple(positions), dict(sorted(counts.items()))


def walk_1d_minkus(param: TwoBridgeParam) -> WalkTrace1D:
    """Step right on each + and left on each - of ``eps_1..eps_{q-1}``."""
    steps = epsilon_sequence(param).signs
    positions, visits = _run_1d(steps)
    return WalkTrace1D(steps, positions, visits)


def walk_1d_hartley(param: TwoBridgeParam) -> WalkTrace1D:
    """Walk on the shifted signs and count crossings of each half-integer.

    Every step has unit length, so it crosses exactly one half-integer:
    the one between its endpoints.
    """
    steps = shifted_sign_sequence(param).signs
    positions, visits = _run_1d(steps)
    crossings = Counter(a + b for a, b in zip(positions, positions[1:]))
    return WalkTrace1D(steps, positions, visits, dict(sorted(crossings.items())))


def _alternating(counts: Mapping[int, int], stride: int) -> LaurentPoly1:
    """Consecutive counts (keys spaced by ``stride``) with alternating signs."""
    lo = min(counts)
    hi = max(counts)
    dense = [counts.get(k, 0) for k in range(lo, hi + 1, stride)]
    return canonical(
        LaurentPoly1.from_dense([(-1) ** n * c for n, c in enumerate(dense)])
    )


def poly_from_1d_visits(trace: WalkTrace1D) -> LaurentPoly1:
    return _alternating(trace.visit_counts, 1)


def poly_from_1d_crossings(trace: WalkTrace1D) -> LaurentPoly1:
    if not trace.crossing_counts:
        raise ValueError("trace carries no crossing counts; build it with walk_1d_hartley")
    return _alternating(trace.crossing_counts, 2)


def walk_2d(param: TwoBridgeParam) -> WalkTrace2D:
    """Lattice walk driven by every other sign, starting with ``eps_2``.

    Step m (1-based) moves horizontally by ``eps_{2m}``; vertically by
    +1 / -1 when ``eps_{2m-1}`` and ``eps_{2m+1}`` are both + / both -,
    and not at all when they differ.
    """
    if not param.is_link:
        raise KindError(f"the lattice walk needs q even (a link), got {param}")
    eps = (0,) + epsilon_sequence(param).signs  # 1-based
    steps = []
    for m in range(1, (param.q - 2) // 2 + 1):
        before, after = eps[2 * m - 1], eps[2 * m + 1]
        dy = before if before == after else 0
        steps.append((eps[2 * m], dy))
    x = y = 0
    positions = [(0, 0)]
    for dx, dy in steps:
        x += dx
        y += dy
        positions.append((x, y))
    visits = dict(sorted(Counter(positions).items()))
    return WalkTrace2D(tuple(steps), tuple(positions), visits)


def raw_poly_from_2d_visits(trace: WalkTrace2D) -> LaurentPoly2:
    """Sum of ``(-1)**(i+j) * k * x**i * y**j`` over visited points, unnormalized."""
    return LaurentPoly2._raw({(i, j): (-1) ** ((i + j) % 2) * k for (i, j), k in trace.visit_counts.items()})


def poly_from_2d_visits(trace: WalkTrace2D) -> LaurentPoly2:
    return canonical(raw_poly_from_2d_visits(trace))
