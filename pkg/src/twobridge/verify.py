"""Exhaustive property sweeps over all parameters up to a bound on q.

Each parameter is checked against every suite that applies to it; the
results are folded into one :class:`SuiteResult` per suite.  Suites marked
``asserted=False`` are findings: they are reported but never fail a run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import formulas, fox
from .fraction import TwoBridgeParam, epsilon_sequence, valid_params
from .laurent import T, canonical, eq_up_to_units, is_trapezoidal
from .walks import (
    poly_from_1d_crossings,
    poly_from_1d_visits,
    poly_from_2d_visits,
    walk_1d_hartley,
    walk_1d_minkus,
    walk_2d,
)


@dataclass
class SuiteResult:
    name: str
    description: str
    asserted: bool = True
    checked: int = 0
    failed: int = 0
    first_failure: TwoBridgeParam | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, param: TwoBridgeParam, passed: bool) -> None:
        self.checked += 1
        if not passed:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = param

    def line(self) -> str:
        if self.asserted:
            status = "PASS" if self.ok else "FAIL"
        else:
            status = "INFO"
        text = f"{status} {self.name}: {self.checked - self.failed}/{self.checked} hold"
        if self.first_failure is not None:
            text += f" (first counterexample {self.first_failure})"
        return text


def _visits_contiguous(trace) -> bool:
    keys = sorted(trace.visit_counts)
    return keys == list(range(keys[0], keys[-1] + 1)) and all(c > 0 for c in trace.visit_counts.values())


def check_walk_formula_1d(param: TwoBridgeParam) -> bool:
    target = formulas.minkus_poly(param)
    return (
        poly_from_1d_visits(walk_1d_minkus(param)) == target
        and poly_from_1d_crossings(walk_1d_hartley(param)) == target
    )


def check_triangle_2d(param: TwoBridgeParam) -> bool:
    target = formulas.two_variable_poly(param)
    return poly_from_2d_visits(walk_2d(param)) == target and fox.alexander_via_fox(param) == target


def check_partials(param: TwoBridgeParam) -> bool:
    w = fox.relator_word(param)
    db = fox.abelianize(fox.fox_derivative(w, "b"))
    return (
        fox.abelianize(fox.fox_derivative(w, "a")) == fox.closed_form_partial_a(param)
        and db == fox.closed_form_partial_b(param)
        and db == formulas.raw_two_variable_sum(param)
    )


def check_identities(param: TwoBridgeParam) -> bool:
    return fox.verify_identities(param).ok


def check_structure_1d(param: TwoBridgeParam) -> bool:
    minkus = walk_1d_minkus(param)
    hartley = walk_1d_hartley(param)
    crossings = sorted(hartley.crossing_counts)
    return (
        len(minkus.steps) == param.q - 1
        and len(hartley.steps) == param.q
        and _visits_contiguous(minkus)
        and sum(minkus.visit_counts.values()) == len(minkus.positions)
        and crossings == list(range(crossings[0], crossings[-1] + 1, 2))
    )


def check_checkerboard(param: TwoBridgeParam) -> bool:
    trace = walk_2d(param)
    odd = epsilon_sequence(param).signs[0::2]  # eps_1, eps_3, ...
    if len(trace.steps) != (param.q - 2) // 2 or len(trace.positions) != param.q // 2:
        return False
    return all((-1) ** ((i + j) % 2) == odd[m] for m, (i, j) in enumerate(trace.positions))


def check_symmetry(param: TwoBridgeParam) -> bool:
    d = formulas.minkus_poly(param)
    ok = eq_up_to_units(d, d.invert_variables())
    if param.is_link:
        d2 = formulas.two_variable_poly(param)
        ok = ok and eq_up_to_units(d2, d2.invert_variables())
    return ok


def check_value_at_one(param: TwoBridgeParam) -> bool:
    if param.is_link:
        return formulas.raw_minkus_sum(param).evaluate(1) == 0 and formulas.minkus_poly(param).evaluate(1) == 0
    return formulas.minkus_poly(param).evaluate(1) in (1, -1)


def check_trapezoidal(param: TwoBridgeParam) -> bool:
    return is_trapezoidal(formulas.minkus_poly(param))


def check_reduced_relation(param: TwoBridgeParam) -> bool:
    diag = formulas.two_variable_poly(param).substitute_diagonal()
    return canonical((T - 1) * diag) == formulas.minkus_poly(param)


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    check: Callable[[TwoBridgeParam], bool]
    applies: Callable[[TwoBridgeParam], bool] = field(default=lambda param: True)
    asserted: Callable[[], bool] = field(default=lambda: True)


def _links(param: TwoBridgeParam) -> bool:
    return param.is_link


def _knots(param: TwoBridgeParam) -> bool:
    return not param.is_link


SUITES: tuple[Suite, ...] = (
    Suite("walk_formula_1d", "integer walk == shifted walk == one-variable sum", check_walk_formula_1d),
    Suite("triangle_2d", "lattice walk == two-variable sum == Fox oracle", check_triangle_2d, _links),
    Suite("fox_partials", "generic Fox partials == closed-form partials", check_partials, _links),
    Suite("identities", "partial expansions, telescoped sum, M11 cancellation", check_identities, _links),
    Suite("structure_1d", "walk lengths and contiguous positive counts", check_structure_1d),
    Suite("checkerboard", "lattice walk length and checkerboard sign law", check_checkerboard, _links),
    Suite("symmetry", "invariance under inverting the variables", check_symmetry),
    Suite("value_at_one", "knot: value +-1 at t=1; link: reduced sum vanishes", check_value_at_one),
    Suite("trapezoidal_knots", "knot polynomials are trapezoidal", check_trapezoidal, _knots),
    Suite("reduced_relation", "(t-1) * diagonal == reduced polynomial", check_reduced_relation, _links),
)

FINDINGS: tuple[Suite, ...] = (
    Suite("trapezoidal_links", "reduced link polynomials are trapezoidal", check_trapezoidal, _links, lambda: False),
)


def run_suites(params: Iterable[TwoBridgeParam], suites=SUITES + FINDINGS) -> list[SuiteResult]:
    results = [SuiteResult(s.name, s.description, s.asserted()) for s in suites]
    for param in params:
        for suite, result in zip(suites, results):
            if suite.applies(param):
                result.record(param, suite.check(param))
    return results


def verify(qmax: int = 200) -> list[SuiteResult]:
    return run_suites(valid_params(qmax))


def all_passed(results: Iterable[SuiteResult]) -> bool:
    return all(r.ok for r in results if r.asserted)
