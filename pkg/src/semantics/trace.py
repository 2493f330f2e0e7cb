"""
Registro de la traza de ejecución en líneas JSON.

Niveles: off (nada), tx (despliegue, veredictos y aserciones), step (además
un registro por sentencia ejecutada con el nombre de la regla aplicada).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Iterable, List, Optional, Tuple

LEVELS = ("off", "tx", "step")

@dataclass
class TraceRecord:
    step: int
    tx: int
    engine: int
    rule: str
    span: Optional[Tuple[int, int]] = None
    emitted: List[dict] = field(default_factory=list)
    fault: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "kind": "step",
            "step": self.step,
            "tx": self.tx,
            "engine": self.engine,
            "rule": self.rule,
            "span": list(self.span) if self.span else None,
            "emitted": self.emitted,
            "fault": self.fault,
        }

class TraceRecorder:
    """Acumula registros según el nivel configurado"""

    def __init__(self, level: str = "tx"):
        if level not in LEVELS:
            raise ValueError(f"nivel de traza desconocido: {level}")
        self.level = level
        self.records: List[dict] = []
        self._counter = 0

    @property
    def steps_enabled(self) -> bool:
        return self.level == "step"

    @property
    def events_enabled(self) -> bool:
        return self.level in ("tx", "step")

    def step(self, tx: int, engine: int, rule: str, span=None,
             emitted: Iterable = (), fault: Optional[str] = None) -> None:
        """Registra la aplicación de una regla (engine 0 = paso conjunto)"""
        self._counter += 1
        if not self.steps_enabled:
            return
        record = TraceRecord(
            step=self._counter,
            tx=tx,
            engine=engine,
            rule=rule,
            span=span,
            emitted=[{"engine": d.engine, **d.relay.to_json()} for d in emitted],
            fault=fault,
        )
        self.records.append(record.to_json())

    def event(self, kind: str, **data) -> None:
        """Registra un evento de transacción (deploy, verdict, expect, ...)"""
        if self.events_enabled:
            self.records.append({"kind": kind, **data})

    def write(self, stream: IO[str]) -> None:
        for record in self.records:
            stream.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")

    def lines(self) -> List[str]:
        return [json.dumps(record, ensure_ascii=False, sort_keys=True) for record in self.records]
