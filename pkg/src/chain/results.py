"""
Veredictos de transacción y traza de ejecución de un escenario.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Tuple

from src.errors import CrystalityError
from src.semantics.outcome import Delivery
from src.state.model import Configuration
from src.state.snapshot import snapshot
from src.syntax.types import TypedValue

APPLIED = "applied"
REVERTED = "reverted"

@dataclass
class Verdict:
    """Resultado de una transacción: applied o reverted con su error"""

    tx: int
    func: str
    status: str
    engine: Optional[int] = None
    error: Optional[CrystalityError] = None
    value: Optional[TypedValue] = None
    relay: bool = False

    @property
    def applied(self) -> bool:
        return self.status == APPLIED

    @property
    def reverted(self) -> bool:
        return self.status == REVERTED

    def to_json(self) -> dict:
        return {
            "tx": self.tx,
            "func": self.func,
            "engine": self.engine,
            "relay": self.relay,
            "status": self.status,
            "error": self.error.to_dict() if self.error is not None else None,
            "value": self.value.to_json() if self.value is not None else None,
        }

class TransactionResult(NamedTuple):
    """(post-estado, veredicto, relays emitidos); con revert el post-estado es el pre-estado"""
    config: Configuration
    verdict: Verdict
    emitted: Tuple[Delivery, ...]

@dataclass
class ExecutionTrace:
    """
    Registro completo de una ejecución.

    records son los registros JSON del TraceRecorder; assertions las
    comprobaciones expect evaluadas (cada una con su campo passed).
    """

    records: List[dict] = field(default_factory=list)
    final: Optional[Configuration] = None
    verdicts: List[Verdict] = field(default_factory=list)
    assertions: List[dict] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and all(a.get("passed") for a in self.assertions)

    @property
    def failed_assertions(self) -> List[dict]:
        return [a for a in self.assertions if not a.get("passed")]

    def extend(self, other: "ExecutionTrace") -> None:
        self.verdicts.extend(other.verdicts)
        self.assertions.extend(other.assertions)
        self.failures.extend(other.failures)
        self.final = other.final

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "verdicts": [verdict.to_json() for verdict in self.verdicts],
            "assertions": self.assertions,
            "failures": self.failures,
            "final": snapshot(self.final) if self.final is not None else None,
        }

__all__ = ["APPLIED", "REVERTED", "Verdict", "TransactionResult", "ExecutionTrace"]
