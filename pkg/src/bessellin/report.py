"""Report records shared by the verification suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["CheckRecord", "summarize", "PASS", "FAIL", "NOTE"]

PASS = "pass"
FAIL = "fail"
# Reduction-identity tuples where no gamma-pole convention reproduces the
# equality are surfaced, not failed: the limiting convention is a choice.
NOTE = "pole-convention-note"


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one executed check, keyed by check id and indices."""

    check: str
    n: int | None = None
    m: int | None = None
    k: int | None = None
    where: str = ""
    status: str = PASS
    detail: str = ""

    def sort_key(self):
        return (
            self.check,
            self.n if self.n is not None else -1,
            self.m if self.m is not None else -1,
            self.k if self.k is not None else -1,
            self.where,
        )

    def render(self) -> str:
        indices = " ".join(
            f"{name}={value}"
            for name, value in (("n", self.n), ("m", self.m), ("k", self.k))
            if value is not None
        )
        parts = [self.status, self.check]
        if indices:
            parts.append(indices)
        if self.where:
            parts.append(self.where)
        line = " ".join(parts)
        if self.detail:
            line += f": {self.detail}"
        return line


@dataclass
class _Summary:
    total: int = 0
    passed: int = 0
    failed: int = 0
    notes: int = 0
    failures: list[CheckRecord] = field(default_factory=list)


def summarize(records) -> _Summary:
    summary = _Summary()
    for record in records:
        summary.total += 1
        if record.status == PASS:
            summary.passed += 1
        elif record.status == FAIL:
            summary.failed += 1
            summary.failures.append(record)
        else:
            summary.notes += 1
    return summary
