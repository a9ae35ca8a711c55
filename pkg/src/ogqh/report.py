"""Outcome record shared by the identity and ring verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class IdentityReport:
    """Result of checking one identity at one parameter tuple.

    ``residual`` is the exact difference of the two sides (a GenPoly or a
    QuantumClass); the identity holds iff it is zero.
    """

    identity: str
    params: dict = field(default_factory=dict)
    residual: Any = None

    @property
    def passed(self) -> bool:
        return self.residual is None or self.residual.is_zero()

    def residual_terms(self) -> list:
        if self.residual is None or self.residual.is_zero():
            return []
        return self.residual.json_terms()

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "params": {k: list(v) if isinstance(v, tuple) else v
                       for k, v in self.params.items()},
            "pass": self.passed,
            "residual_terms": self.residual_terms(),
        }

    def __str__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{'PASS' if self.passed else 'FAIL'} {self.identity}({args})"
