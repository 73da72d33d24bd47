"""Itemised pass/fail reports shared by the validators."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckItem:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class ValidationReport:
    items: list[CheckItem] = field(default_factory=list)
    incomplete: bool = False

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.items.append(CheckItem(name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.items)

    def failures(self) -> list[CheckItem]:
        return [item for item in self.items if not item.ok]

    def __str__(self) -> str:
        lines = [f"{'ok  ' if i.ok else 'FAIL'} {i.name}: {i.detail}" for i in self.items]
        if self.incomplete:
            lines.append("(entry flagged incomplete)")
        return "\n".join(lines)
