"""
Sobres de transacción y resolución del remitente.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from src.errors import InvalidSender
from src.state.model import RelayTransaction, SystemParams, TargetKind
from src.syntax.types import TypedValue

class TransactionKind(Enum):
    USER = "user"
    RELAY = "relay"

@dataclass(frozen=True)
class TransactionEnvelope:
    """
    Una transacción es una llamada a función.

    Las de usuario llevan remitente (engine, dirección); las de relay llevan
    el relay consumido y el engine donde se ejecuta la copia.
    """

    kind: TransactionKind
    func: str
    args: Tuple[TypedValue, ...]
    id: int = 0
    sender: Optional[Tuple[int, int]] = None
    relay: Optional[RelayTransaction] = None
    engine: Optional[int] = None

    @classmethod
    def user(cls, sender: Tuple[int, int], func: str, args=(), tx_id: int = 0) -> "TransactionEnvelope":
        return cls(TransactionKind.USER, func, tuple(args), tx_id, sender=tuple(sender))

    @classmethod
    def from_relay(cls, relay: RelayTransaction, engine: int, tx_id: int = 0) -> "TransactionEnvelope":
        return cls(TransactionKind.RELAY, relay.func, relay.args, tx_id, relay=relay, engine=engine)

    @property
    def is_relay(self) -> bool:
        return self.kind is TransactionKind.RELAY

    def describe(self) -> str:
        args = ", ".join(str(arg) for arg in self.args)
        if self.is_relay:
            return f"relay#{self.relay.sequence}@{self.engine} {self.func}({args})"
        return f"{self.sender} {self.func}({args})"

def get_sender_address(tx: TransactionEnvelope, params: SystemParams) -> Tuple[int, int]:
    """
    Coordenadas (i, j) del marco donde se ejecuta la transacción.

    Usuario: el remitente declarado. Relay a la dirección j entregado al
    engine r: (r, j). Copia @engines en el engine r: (r, 1). Relay @global:
    (engine de origen, 1).

    Raises:
        InvalidSender: Si las coordenadas quedan fuera de [1, n] x [1, k]
    """
    if not tx.is_relay:
        if tx.sender is None:
            raise InvalidSender("transacción de usuario sin remitente")
        engine, index = tx.sender
    else:
        kind = tx.relay.target.kind
        if kind is TargetKind.ADDRESS:
            engine, index = tx.engine, tx.relay.target.index
        elif kind is TargetKind.ENGINE:
            engine, index = tx.engine, 1
        else:
            engine, index = (tx.engine or tx.relay.origin[0]), 1

    if engine is None or index is None or not params.valid_address(engine, index):
        raise InvalidSender(f"remitente fuera de rango: ({engine}, {index}) con n={params.n}, k={params.k}")
    return engine, index
