"""
Contexto mutable de una ejecución.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from config.constants import Config
from src.semantics.outcome import Delivery
from src.semantics.trace import TraceRecorder
from src.state.model import Configuration
from src.state.registry import FunctionRegistry

@dataclass
class ExecutionContext:
    """
    Estado de trabajo del motor de reglas.

    joint indica que se está dentro de una réplica de un paso global
    conjunto; steps cuenta sentencias contra budget.
    """

    cfg: Configuration
    registry: FunctionRegistry
    tx_id: int = 0
    budget: int = Config.STEP_BUDGET
    joint: bool = False
    emitted: List[Delivery] = field(default_factory=list)
    recorder: Optional[TraceRecorder] = None
    steps: int = 0
