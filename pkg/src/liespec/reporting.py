"""Report values returned by the check_* operations."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Report:
    name: str
    passed: bool
    details: tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.name}"]
        lines.extend(f"  {d}" for d in self.details)
        return "\n".join(lines)
