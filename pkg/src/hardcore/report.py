"""Verification report records and their JSON / CSV forms."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def fmt(x: Any) -> Any:
    """Rationals become ``"num/den"`` strings, recursively through containers."""
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if x is None or isinstance(x, (bool, int, str, float)):
        return x
    if isinstance(x, dict):
        return {k: fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [fmt(v) for v in x]
    return str(x)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` (or a bare integer) into a Fraction; decimals are rejected."""
    s = str(text).strip()
    if any(c in s for c in ".eE"):
        raise ValueError(f"rational {text!r} must be written as p/q, not a decimal")
    return Fraction(s)


@dataclass
class VerificationReport:
    check_id: str
    scope: dict
    counterexamples: list = field(default_factory=list)
    extremal_witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    checked: int = 0
    runtime_ms: int = 0

    @property
    def verdict(self) -> str:
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, graph: str, lam, lhs_name: str, lhs, rhs_name: str, rhs, what: str):
        self.counterexamples.append({
            "graph": graph, "lambda": fmt(lam) if lam is not None else None,
            "what": what, "lhs_name": lhs_name, "lhs": fmt(lhs),
            "rhs_name": rhs_name, "rhs": fmt(rhs),
        })

    def witness(self, graph: str, value, **extra):
        self.extremal_witnesses.append({"graph": graph, "value": fmt(value),
                                        **{k: fmt(v) for k, v in extra.items()}})

    def finish(self, start: float):
        self.runtime_ms = int((time.perf_counter() - start) * 1000)

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "check_id": self.check_id,
            "scope": fmt(self.scope),
            "verdict": self.verdict,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "extremal_witnesses": self.extremal_witnesses,
            "notes": self.notes,
        }
        if timing:
            out["runtime_ms"] = self.runtime_ms
        return out


def reports_to_json(reports: list[VerificationReport], timing: bool = True) -> str:
    ordered = sorted(reports, key=lambda r: r.check_id)
    return json.dumps([r.to_dict(timing) for r in ordered], indent=2) + "\n"


def reports_to_csv(reports: list[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check_id", "scope", "verdict", "counterexamples"])
    for r in sorted(reports, key=lambda r: r.check_id):
        w.writerow([r.check_id, json.dumps(fmt(r.scope), sort_keys=True),
                    r.verdict, len(r.counterexamples)])
    return buf.getvalue()
