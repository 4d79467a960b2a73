"""Serializable result records and the JSON / CSV table formats."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable

from .fraction import TwoBridgeParam
from .laurent import LaurentPoly, coefficient_profile, poly_class
from .polystr import format_poly

CSV_HEADER = ("p", "q", "kind", "polynomial")


@dataclass(frozen=True)
class OutputRecord:
    p: int
    q: int
    kind: str
    polynomial: LaurentPoly
    walk: tuple | None = None

    @classmethod
    def build(cls, param: TwoBridgeParam, poly: LaurentPoly, walk=None) -> "OutputRecord":
        return cls(param.p, param.q, param.kind.value, poly, None if walk is None else tuple(walk))

    @property
    def vars(self) -> list[str]:
        return list(self.polynomial.variables)

    @property
    def coefficient_profile(self) -> list[int] | None:
        if self.polynomial.nvars != 1 or self.polynomial.is_zero():
            return None
        return coefficient_profile(self.polynomial)

    def to_dict(self) -> dict:
        out = {
            "p": self.p,
            "q": self.q,
            "kind": self.kind,
            "vars": self.vars,
            "terms": self.polynomial.to_terms(),
        }
        profile = self.coefficient_profile
        if profile is not None:
            out["coefficient_profile"] = profile
        if self.walk is not None:
            out["walk"] = [list(pt) if isinstance(pt, tuple) else pt for pt in self.walk]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "OutputRecord":
        poly = poly_class(len(data["vars"])).from_terms(data["terms"])
        walk = data.get("walk")
        if walk is not None:
            walk = tuple(tuple(pt) if isinstance(pt, list) else pt for pt in walk)
        return cls(data["p"], data["q"], data["kind"], poly, walk)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls.from_dict(json.loads(text))

    def csv_row(self) -> tuple:
        return (self.p, self.q, self.kind, format_poly(self.polynomial))


def records_to_csv(records: Iterable[OutputRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.csv_row())
    return buf.getvalue()


def records_to_json(records: Iterable[OutputRecord]) -> str:
    rows = [rec.to_json() for rec in records]
    return "[\n" + ",\n".join(rows) + "\n]\n"


def records_from_json(text: str) -> list[OutputRecord]:
    return [OutputRecord.from_dict(d) for d in json.loads(text)]
