"""Exact integer Laurent polynomials in one (t) or two (x, y) variables.

Values are immutable and sparse: a mapping from exponent tuples to nonzero
integer coefficients, iterated in ascending lexicographic exponent order.
Equality ``==`` is exact; ``eq_up_to_units`` is the coarser relation that
treats ``f`` and ``+-t**k * f`` (resp. ``+-x**a * y**b * f``) as equal.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DomainError, ZeroPolynomial

Exponent = tuple[int, ...]


class LaurentPoly:
    nvars: int = 0
    variables: tuple[str, ...] = ()

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict[Exponent, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            acc[self._key(exp)] += int(coeff)
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def _key(cls, exp) -> Exponent:
        if isinstance(exp, int):
            exp = (exp,)
        exp = tuple(int(e) for e in exp)
        if len(exp) != cls.nvars:
            raise ValueError(f"{cls.__name__} needs {cls.nvars} exponent(s), got {exp}")
        return exp

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]):
        """Build from an already-merged dict without re-validating keys."""
        obj = cls.__new__(cls)
        obj._terms = {e: terms[e] for e in sorted(terms) if terms[e] != 0}
        obj._hash = None
        return obj

    # construction helpers

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def constant(cls, c: int):
        return cls._raw({(0,) * cls.nvars: c})

    @classmethod
    def monomial(cls, exp, coeff: int = 1):
        return cls._raw({cls._key(exp): coeff})

    # container protocol

    def terms(self) -> list[tuple[Exponent, int]]:
        return list(self._terms.items())

    def coefficient(self, exp) -> int:
        return self._terms.get(self._key(exp), 0)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.constant(other)
        if not isinstance(other, LaurentPoly) or other.nvars != self.nvars:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._terms!r})"

    def __str__(self) -> str:
        from .polystr import format_poly

        return format_poly(self)

    # ring operations

    def _coerce(self, other):
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            return self.constant(other)
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise TypeError(f"cannot combine {self.nvars}- and {other.nvars}-variable polynomials")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return self._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return self._raw(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use monomial()")
        result = self.constant(1)
        for _ in range(n):
            result = result * self
        return result

    # structure

    def min_exponents(self) -> Exponent:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no exponents")
        return tuple(min(e[k] for e in self._terms) for k in range(self.nvars))

    def max_exponents(self) -> Exponent:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no exponents")
        return tuple(max(e[k] for e in self._terms) for k in range(self.nvars))

    def shift(self, exp):
        """Multiply by the monomial with exponent ``exp``."""
        exp = self._key(exp)
        return self._raw({tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()})

    def invert_variables(self):
        """Substitute every variable by its inverse."""
        return self._raw({tuple(-a for a in e): c for e, c in self._terms.items()})

    def evaluate(self, point) -> int:
        """Evaluate exactly at an integer point.

        Negative exponents are allowed only where the coordinate is +-1, so
        the result stays in the integers.
        """
        if isinstance(point, int):
            point = (point,)
        point = tuple(point)
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinate(s), got {point}")
        total = 0
        for e, c in self._terms.items():
            term = c
            for base, k in zip(point, e):
                if k < 0:
                    if base not in (1, -1):
                        raise DomainError(f"negative exponent {k} at non-unit base {base}")
                    k = -k
                term *= base**k
            total += term
        return total

    def to_terms(self) -> list[list]:
        """Serialize as ``[[[e, ...], c], ...]`` in ascending exponent order."""
        return [[list(e), c] for e, c in self._terms.items()]

    @classmethod
    def from_terms(cls, data: Iterable):
        return cls((tuple(e), c) for e, c in data)


class LaurentPoly1(LaurentPoly):
    """Laurent polynomial in t."""

    nvars = 1
    variables = ("t",)
    __slots__ = ()

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], start: int = 0) -> "LaurentPoly1":
        """``coeffs[k]`` becomes the coefficient of ``t**(start + k)``."""
        return cls._raw({(start + k,): c for k, c in enumerate(coeffs)})

    def degree_span(self) -> int:
        return self.max_exponents()[0] - self.min_exponents()[0]


class LaurentPoly2(LaurentPoly):
    """Laurent polynomial in x, y."""

    nvars = 2
    variables = ("x", "y")
    __slots__ = ()

    def substitute_diagonal(self) -> LaurentPoly1:
        """Set ``x = y = t``."""
        acc: dict[Exponent, int] = defaultdict(int)
        for (i, j), c in self._terms.items():
            acc[(i + j,)] += c
        return LaurentPoly1._raw(acc)


def poly_class(nvars: int) -> type[LaurentPoly]:
    if nvars == 1:
        return LaurentPoly1
    if nvars == 2:
        return LaurentPoly2
    raise ValueError(f"only 1 or 2 variables are supported, got {nvars}")


T = LaurentPoly1.monomial(1)
X = LaurentPoly2.monomial((1, 0))
Y = LaurentPoly2.monomial((0, 1))


@dataclass(frozen=True)
class UnitNormalForm:
    """Canonical representative plus the unit divided out of the input.

    ``input == sign * monomial(shift) * normal``.
    """

    normal: LaurentPoly
    sign: int
    shift: Exponent

    @property
    def unit(self) -> LaurentPoly:
        return type(self.normal).monomial(self.shift, self.sign)


def normalize(p: LaurentPoly) -> UnitNormalForm:
    """Shift every minimum exponent to 0 and make the lowest monomial positive.

    "Lowest" is the lexicographically smallest exponent tuple; in one
    variable that is the constant term.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    mins = p.min_exponents()
    shifted = {tuple(a - m for a, m in zip(e, mins)): c for e, c in p}
    lead = shifted[min(shifted)]
    sign = 1 if lead > 0 else -1
    normal = type(p)._raw({e: sign * c for e, c in shifted.items()})
    return UnitNormalForm(normal, sign, mins)


def canonical(p: LaurentPoly) -> LaurentPoly:
    return normalize(p).normal


def eq_up_to_units(a: LaurentPoly, b: LaurentPoly) -> bool:
    if a.nvars != b.nvars:
        raise TypeError("polynomials have different variable counts")
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return canonical(a) == canonical(b)


def substitute_diagonal(p: LaurentPoly2) -> LaurentPoly1:
    return p.substitute_diagonal()


def invert_variables(p: LaurentPoly) -> LaurentPoly:
    return p.invert_variables()


def evaluate(p: LaurentPoly, point) -> int:
    return p.evaluate(point)


def coefficient_profile(p: LaurentPoly1) -> list[int]:
    """Dense coefficients of the normal form, constant term first."""
    normal = canonical(p)
    (top,) = normal.max_exponents()
    return [normal.coefficient(k) for k in range(top + 1)]


def is_trapezoidal(p: LaurentPoly1) -> bool:
    """Trapezoid test on the normalized coefficients ``c_0..c_n``.

    No internal zeros, strictly alternating signs, and magnitudes that
    are non-decreasing on ``[0, m]``, constant on ``[m, n - m]`` and
    non-increasing on ``[n - m, n]`` for some ``m <= n / 2``.
    """
    coeffs = coefficient_profile(p)
    if any(c == 0 for c in coeffs):
        return False
    if any((a > 0) == (b > 0) for a, b in zip(coeffs, coeffs[1:])):
        return False
    mags = [abs(c) for c in coeffs]
    n = len(mags) - 1
    peak = max(mags)
    first = mags.index(peak)
    last = n - mags[::-1].index(peak)
    if last != n - first:
        return False
    rising = all(a <= b for a, b in zip(mags[: first + 1], mags[1 : first + 1]))
    plateau = all(m == peak for m in mags[first : last + 1])
    falling = all(a >= b for a, b in zip(mags[last:], mags[last + 1 :]))
    return rising and plateau and falling
