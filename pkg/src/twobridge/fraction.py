"""2-bridge parameters and the sign sequences derived from them.

Everything downstream is driven by ``eps(i) = (-1)**floor(i*p/q)``.  All
floors are taken with integer division; half-integer positions used by the
shifted sequence are carried as doubled integers so no float ever appears.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import GcdError, ParityError, RangeError

MAX_Q = 10**6


class Kind(enum.Enum):
    KNOT = "knot"
    LINK = "link"


class Origin(enum.Enum):
    EPSILON = "epsilon"
    EPSILON_WITH_ZERO = "epsilon_with_zero"
    SHIFTED = "shifted"


@dataclass(frozen=True)
class TwoBridgeParam:
    """A validated fraction p/q naming the knot or link K(p/q).

    Build instances with :func:`new_param`; the constructor re-validates so
    a hand-built instance cannot break the invariants either.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        _validate(self.p, self.q)

    @property
    def kind(self) -> Kind:
        return Kind.LINK if self.q % 2 == 0 else Kind.KNOT

    @property
    def is_link(self) -> bool:
        return self.q % 2 == 0

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class SignSequence:
    signs: tuple[int, ...]
    origin: Origin

    def __len__(self) -> int:
        return len(self.signs)

    def __iter__(self):
        return iter(self.signs)

    def __getitem__(self, k):
        return self.signs[k]

    def __str__(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)


def _validate(p: int, q: int) -> None:
    if isinstance(p, bool) or isinstance(q, bool) or not isinstance(p, int) or not isinstance(q, int):
        raise TypeError("p and q must be integers")
    if not 0 < p < q:
        raise RangeError(f"need 0 < p < q, got p={p}, q={q}")
    if q > MAX_Q:
        raise RangeError(f"q={q} exceeds the supported maximum {MAX_Q}")
    if p % 2 == 0:
        raise ParityError(f"p must be odd, got p={p}")
    if gcd(p, q) != 1:
        raise GcdError(f"gcd({p}, {q}) = {gcd(p, q)} != 1")


def new_param(p: int, q: int) -> TwoBridgeParam:
    """Validate ``(p, q)`` and return the parameter for K(p/q).

    Raises:
        RangeError: unless ``0 < p < q <= MAX_Q``.
        ParityError: if p is even.
        GcdError: if p and q share a factor.
    """
    return TwoBridgeParam(p, q)


def mirror_normalize(p: int, q: int) -> TwoBridgeParam:
    """Replace an even p (q odd) by ``q - p``, i.e. pass to the mirror image.

    The Alexander polynomial does not see mirroring.  Parameters that are
    already valid are returned unchanged; anything else fails exactly as
    :func:`new_param` would on the substituted value.
    """
    if 0 < p < q and p % 2 == 0 and q % 2 == 1 and gcd(p, q) == 1:
        return new_param(q - p, q)
    return new_param(p, q)


def needs_mirror(p: int, q: int) -> bool:
    """True when ``(p, q)`` is rejected only because p is even and q odd."""
    return 0 < p < q and p % 2 == 0 and q % 2 == 1 and gcd(p, q) == 1


def epsilon(param: TwoBridgeParam, i: int) -> int:
    """Return ``(-1)**floor(i*p/q)`` for ``0 <= i <= q - 1``."""
    if not 0 <= i <= param.q - 1:
        raise IndexError(f"epsilon index {i} outside 0..{param.q - 1}")
    return -1 if (i * param.p // param.q) % 2 else 1


def epsilon_sequence(param: TwoBridgeParam) -> SignSequence:
    """Signs for the multiples p, 2p, ..., (q-1)p: ``(eps_1, ..., eps_{q-1})``."""
    p, q = param.p, param.q
    signs = tuple(-1 if (i * p // q) % 2 else 1 for i in range(1, q))
    return SignSequence(signs, Origin.EPSILON)


def epsilon_sequence_with_zero(param: TwoBridgeParam) -> SignSequence:
    """``(eps_0, eps_1, ..., eps_{q-1})``; length q, first entry +1."""
    p, q = param.p, param.q
    signs = tuple(-1 if (i * p // q) % 2 else 1 for i in range(q))
    return SignSequence(signs, Origin.EPSILON_WITH_ZERO)


def shifted_sign_sequence(param: TwoBridgeParam) -> SignSequence:
    """Signs of the multiples p, ..., qp each moved down by p/2.

    Position ``i*p - p/2`` is compared with the multiples of q through the
    doubled numerator: ``floor((2*i*p - p) / (2*q))``.  Returns q signs.
    """
    p, q = param.p, param.q
    signs = tuple(-1 if ((2 * i * p - p) // (2 * q)) % 2 else 1 for i in range(1, q + 1))
    return SignSequence(signs, Origin.SHIFTED)


def valid_params(qmax: int, *, knots: bool = True, links: bool = True, qmin: int = 2):
    """Yield every valid parameter with ``qmin <= q <= qmax``, ordered by q then p."""
    for q in range(max(qmin, 2), qmax + 1):
        if (q % 2 == 0 and not links) or (q % 2 == 1 and not knots):
            continue
        for p in range(1, q, 2):
            if gcd(p, q) == 1:
                yield TwoBridgeParam(p, q)
