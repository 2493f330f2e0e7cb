"""
Resultado de un paso de la semántica.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Tuple

from src.errors import ExecutionError
from src.state.model import Configuration, RelayTransaction

class Status(Enum):
    PROGRESS = "progress"
    DONE = "done"
    FAULT = "fault"

class Delivery(NamedTuple):
    """Un relay insertado en el mempool de un engine"""
    engine: int
    relay: RelayTransaction

@dataclass
class StepOutcome:
    """
    Post-estado de un paso, relays emitidos y estado.

    Con status FAULT, config es el pre-estado sin cambios y error indica la falla.
    """

    config: Configuration
    emitted: Tuple[Delivery, ...] = ()
    status: Status = Status.DONE
    error: Optional[ExecutionError] = None

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAULT

    @property
    def relays(self) -> Tuple[RelayTransaction, ...]:
        """Relays distintos emitidos (una entrada por emisión, no por copia)"""
        seen = []
        for delivery in self.emitted:
            if delivery.relay not in seen:
                seen.append(delivery.relay)
        return tuple(seen)
