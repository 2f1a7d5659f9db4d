"""Verification results shared by the identity checks."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    name: str
    p: int
    q: int
    size: int
    passed: bool
    detail: str = ""

    def __bool__(self):
        return self.passed

    def line(self) -> str:
        """One greppable report line: ``CHECK <name> p=.. q=.. size=.. PASS|FAIL [detail]``."""
        status = "PASS" if self.passed else "FAIL"
        text = f"CHECK {self.name} p={self.p} q={self.q} size={self.size} {status}"
        if self.detail:
            text += " " + self.detail
        return text
