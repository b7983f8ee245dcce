"""Check reports: one record per verified parameter tuple.

A report carries the check id, the parameters that reproduce the case, both
exact sides, and a pass/fail status.  Serialization is NDJSON-friendly:
``to_json`` yields one flat dict per report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

from .polyring import UniPoly, render_poly
from .series import Series


def encode_value(v: Any):
    """JSON-encodable form: UniPoly as its coefficient list, Series as
    {order, coeffs}, containers element-wise."""
    if isinstance(v, UniPoly):
        return list(v.coeffs)
    if isinstance(v, Series):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [encode_value(e) for e in v]
    return v


def render_value(v: Any) -> str:
    """Human form: polynomials in explicit-sign ascending notation."""
    if isinstance(v, UniPoly):
        return render_poly(v)
    if isinstance(v, Series):
        inner = ", ".join(render_value(c) for c in v.coeffs)
        return f"[{inner}] + O(x^{v.order})"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(render_value(e) for e in v) + "]"
    return str(v)


@dataclass(frozen=True, eq=False)
class CheckReport:
    check: str
    params: dict[str, Any]
    ok: bool
    lhs: Any
    rhs: Any

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "params": {k: encode_value(v) for k, v in self.params.items()},
            "status": self.status,
            "lhs": encode_value(self.lhs),
            "rhs": encode_value(self.rhs),
        }

    def __str__(self) -> str:
        ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return (
            f"[{self.status}] {self.check}({ps}): "
            f"{render_value(self.lhs)} vs {render_value(self.rhs)}"
        )


def equal_report(check: str, params: dict, lhs, rhs, ok: bool | None = None) -> CheckReport:
    """Report comparing two exact values; equality decided by == unless the
    caller already knows the verdict."""
    if ok is None:
        ok = lhs == rhs
    return CheckReport(check=check, params=params, ok=bool(ok), lhs=lhs, rhs=rhs)


def summarize(reports: Iterable[CheckReport]) -> tuple[int, int]:
    """(total, failed) over a report stream."""
    total = failed = 0
    for r in reports:
        total += 1
        if not r.ok:
            failed += 1
    return total, failed
