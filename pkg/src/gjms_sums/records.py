"""Verdict records produced by every identity check."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .exact_arith import render_rational

__all__ = ["CheckRecord", "PASS", "FAIL", "SKIPPED", "run_check", "skipped", "render_value"]

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

DISPLAY_LIMIT = 400


def render_value(value: Any) -> str:
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return render_rational(Fraction(value))
    render = getattr(value, "render", None)
    if render is not None:
        return render()
    return str(value)


def _param_json(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return render_rational(value)
    return str(value)


def _param_sort(value: Any) -> tuple:
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return (0, Fraction(value), "")
    return (1, Fraction(0), str(value))


@dataclass
class CheckRecord:
    """Outcome of one exact identity check.

    ``status`` is ``pass`` exactly when both sides compared equal as exact
    objects; ``lhs``/``rhs`` hold their canonical renderings.
    """

    name: str
    params: dict[str, Any] = field(default_factory=dict)
    status: str = PASS
    lhs: str = ""
    rhs: str = ""
    elapsed_ms: float = 0.0
    reason: str | None = None
    diff: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def sort_key(self) -> tuple:
        return (self.name, tuple((k, _param_sort(v)) for k, v in self.params.items()))

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "check": self.name,
            "params": {k: _param_json(v) for k, v in self.params.items()},
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else None,
        }
        if self.reason is not None:
            out["reason"] = self.reason
        if self.diff is not None:
            out["diff"] = self.diff
        return out

    def short(self, limit: int = DISPLAY_LIMIT) -> str:
        params = ", ".join(f"{k}={_param_json(v)}" for k, v in self.params.items())
        line = f"[{self.status.upper():7}] {self.name}({params})"
        if self.status == SKIPPED and self.reason:
            line += f"  reason: {self.reason}"
        elif self.status == FAIL and self.diff:
            d = self.diff if len(self.diff) <= limit else self.diff[:limit] + " ..."
            line += f"  lhs-rhs = {d}"
        return line


def run_check(name: str, params: dict[str, Any], compute: Callable[[], tuple[Any, Any]]) -> CheckRecord:
    """Time ``compute()``, compare its two sides exactly and build a record."""
    t0 = time.perf_counter()
    lhs, rhs = compute()
    equal = lhs == rhs
    elapsed = (time.perf_counter() - t0) * 1e3
    rec = CheckRecord(
        name=name,
        params=dict(params),
        status=PASS if equal else FAIL,
        lhs=render_value(lhs),
        rhs=render_value(rhs),
        elapsed_ms=elapsed,
    )
    if not equal:
        try:
            rec.diff = render_value(lhs - rhs)
        except TypeError:
            rec.diff = None
    return rec


def skipped(name: str, params: dict[str, Any], reason: str) -> CheckRecord:
    return CheckRecord(name=name, params=dict(params), status=SKIPPED, reason=reason)
