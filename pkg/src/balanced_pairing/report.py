"""Structured outcome of a single identity check."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Union

Value = Union[int, tuple]

CSV_FIELDS = ("check", "p", "m", "g", "x", "n", "passed", "lhs", "rhs", "note")


def _fmt(value: Value) -> Any:
    # numbers go out as decimal strings; tuples as lists of them
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, tuple):
        return [_fmt(v) for v in value]
    return str(value)


def _flat(value: Value) -> str:
    if isinstance(value, tuple):
        return "(" + ",".join(_flat(v) for v in value) + ")"
    return str(value)


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    params: dict
    passed: bool
    lhs: Value
    rhs: Value
    note: str = ""
    comparison: str = field(default="exact", compare=False)

    def sort_key(self) -> tuple:
        p = self.params.get("p", self.params.get("n", 0))
        rest = tuple(sorted((k, v) for k, v in self.params.items() if k not in ("p",)))
        return (p, self.check_id, rest)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"check": self.check_id}
        for key in ("p", "m", "g", "x", "n"):
            if key in self.params:
                out[key] = _fmt(self.params[key])
        out["passed"] = self.passed
        out["lhs"] = _fmt(self.lhs)
        out["rhs"] = _fmt(self.rhs)
        if self.note:
            out["note"] = self.note
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_csv_row(self) -> dict:
        row = {k: "" for k in CSV_FIELDS}
        row["check"] = self.check_id
        for key in ("p", "m", "g", "x", "n"):
            if key in self.params:
                row[key] = str(self.params[key])
        row["passed"] = "true" if self.passed else "false"
        row["lhs"] = _flat(self.lhs)
        row["rhs"] = _flat(self.rhs)
        row["note"] = self.note
        return row

    def to_human(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.check_id:<28} {params:<20} lhs={_flat(self.lhs)} rhs={_flat(self.rhs)}"
        return line + (f"  # {self.note}" if self.note else "")
