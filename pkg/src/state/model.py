"""
Modelo de la configuración completa del sistema.

(σ1, Ω1, Prog1, ..., σn, Ωn, Progn, G): por engine un estado σi con sus k
stores de dirección, su store de engine y su pila de memoria Mi; un mempool
Ωi; un slot de programa Progi; y el store global G compartido.

Los engines y direcciones se numeran desde 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Tuple

from src.errors import InvalidParams
from src.store.bytestore import ByteStore
from src.syntax.nodes import Stmt
from src.syntax.types import TypedValue

RETURN_SLOT = "rt"

@dataclass(frozen=True)
class SystemParams:
    """Topología del sistema: n engines, k direcciones por engine y semilla"""

    n: int
    k: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise InvalidParams(f"se requiere n >= 1 y k >= 1 (n={self.n}, k={self.k})")
        if self.seed < 0:
            raise InvalidParams(f"la semilla debe ser no negativa (seed={self.seed})")

    def valid_address(self, engine: int, index: int) -> bool:
        return 1 <= engine <= self.n and 1 <= index <= self.k

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "seed": self.seed}

# ---------------------------------------------------------------------------
# Pila de memoria
# ---------------------------------------------------------------------------

class ScopeKind(Enum):
    ADDRESS = "address"
    ENGINE = "engine"
    GLOBAL = "global"
    NONE = "none"

@dataclass(frozen=True)
class ScopeBinding:
    """Scope de una capa de memoria; ADDRESS lleva el índice local j"""

    kind: ScopeKind
    index: Optional[int] = None

    @classmethod
    def address(cls, index: int) -> "ScopeBinding":
        return cls(ScopeKind.ADDRESS, index)

    @classmethod
    def engine(cls) -> "ScopeBinding":
        return cls(ScopeKind.ENGINE)

    @classmethod
    def global_(cls) -> "ScopeBinding":
        return cls(ScopeKind.GLOBAL)

    @classmethod
    def none(cls) -> "ScopeBinding":
        return cls(ScopeKind.NONE)

    @property
    def label(self) -> str:
        if self.kind is ScopeKind.ADDRESS:
            return f"(address,{self.index})"
        return self.kind.value

@dataclass(frozen=True)
class MemoryLayer:
    """Capa de la pila: temporales, scope del marco y nombre del slot de retorno"""

    store: ByteStore
    scope: ScopeBinding
    rt: Optional[str] = None

    def copy(self) -> "MemoryLayer":
        return MemoryLayer(self.store.copy(), self.scope, self.rt)

class MemoryStack:
    """Pila Mi de capas de memoria"""

    def __init__(self, layers: Optional[List[MemoryLayer]] = None):
        self.layers: List[MemoryLayer] = list(layers or [])

    def push(self, layer: MemoryLayer) -> None:
        self.layers.append(layer)

    def pop(self) -> MemoryLayer:
        if not self.layers:
            raise IndexError("pop sobre pila de memoria vacía")
        return self.layers.pop()

    def top(self) -> MemoryLayer:
        if not self.layers:
            raise IndexError("top sobre pila de memoria vacía")
        return self.layers[-1]

    @property
    def depth(self) -> int:
        return len(self.layers)

    def is_empty(self) -> bool:
        return not self.layers

    def copy(self) -> "MemoryStack":
        return MemoryStack([layer.copy() for layer in self.layers])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MemoryStack):
            return NotImplemented
        return self.layers == other.layers

    __hash__ = None

    def __repr__(self) -> str:
        return f"MemoryStack(depth={self.depth})"

def new_ID(layer: MemoryLayer) -> str:
    """Nombre fresco para el slot de retorno; nunca es un identificador del fuente"""
    if RETURN_SLOT not in layer.store:
        return RETURN_SLOT
    suffix = 2
    while f"{RETURN_SLOT}#{suffix}" in layer.store:
        suffix += 1
    return f"{RETURN_SLOT}#{suffix}"

# ---------------------------------------------------------------------------
# Estado de engine
# ---------------------------------------------------------------------------

class EngineState:
    """σi = (Ψi,1 .. Ψi,k, Ψi,s, Mi)"""

    def __init__(self, k: int):
        self.address_stores: List[ByteStore] = [ByteStore() for _ in range(k)]
        self.engine_store = ByteStore()
        self.memory = MemoryStack()

    def address_store(self, index: int) -> ByteStore:
        return self.address_stores[index - 1]

    def copy(self) -> "EngineState":
        clone = EngineState.__new__(EngineState)
        clone.address_stores = [store.copy() for store in self.address_stores]
        clone.engine_store = self.engine_store.copy()
        clone.memory = self.memory.copy()
        return clone

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EngineState):
            return NotImplemented
        return (
            self.address_stores == other.address_stores
            and self.engine_store == other.engine_store
            and self.memory == other.memory
        )

    __hash__ = None

# ---------------------------------------------------------------------------
# Relays y mempools
# ---------------------------------------------------------------------------

class TargetKind(Enum):
    ADDRESS = "address"
    ENGINE = "engine"
    GLOBAL = "global"

@dataclass(frozen=True)
class RelayTarget:
    kind: TargetKind
    index: Optional[int] = None

    @classmethod
    def address(cls, index: int) -> "RelayTarget":
        return cls(TargetKind.ADDRESS, index)

    @classmethod
    def engine(cls) -> "RelayTarget":
        return cls(TargetKind.ENGINE)

    @classmethod
    def global_(cls) -> "RelayTarget":
        return cls(TargetKind.GLOBAL)

    @property
    def label(self) -> str:
        if self.kind is TargetKind.ADDRESS:
            return f"(address,{self.index})"
        return self.kind.value

@dataclass(frozen=True)
class RelayTransaction:
    """
    Llamada diferida empaquetada. Los argumentos ya están evaluados.

    origin es (engine, j) del marco emisor; j = 0 si el marco no es de dirección.
    arrival es el id de la transacción que la emitió.
    """

    target: RelayTarget
    func: str
    args: Tuple[TypedValue, ...]
    origin: Tuple[int, int]
    sequence: int
    arrival: int = 0

    @property
    def order_key(self) -> Tuple[int, int, int]:
        return (self.arrival, self.origin[0], self.sequence)

    def describe(self) -> str:
        args = ", ".join(str(arg) for arg in self.args)
        return f"{self.target.label} {self.func}({args})"

    def to_json(self) -> dict:
        return {
            "target": self.target.kind.value,
            "index": self.target.index,
            "func": self.func,
            "args": [arg.to_json() for arg in self.args],
            "origin": list(self.origin),
            "sequence": self.sequence,
            "arrival": self.arrival,
        }

class Mempool:
    """Ωi: relays pendientes ordenados por (llegada, engine de origen, secuencia)"""

    def __init__(self, entries: Optional[List[RelayTransaction]] = None):
        self.entries: List[RelayTransaction] = sorted(entries or [], key=lambda r: r.order_key)

    def add(self, relay: RelayTransaction) -> None:
        self.entries.append(relay)
        self.entries.sort(key=lambda r: r.order_key)

    def remove(self, relay: RelayTransaction) -> None:
        self.entries.remove(relay)

    def head(self) -> Optional[RelayTransaction]:
        return self.entries[0] if self.entries else None

    def copy(self) -> "Mempool":
        return Mempool(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[RelayTransaction]:
        return iter(list(self.entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mempool):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def __repr__(self) -> str:
        return f"Mempool({[relay.describe() for relay in self.entries]})"

# ---------------------------------------------------------------------------
# Configuración
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class Configuration:
    """
    Estado completo del sistema.

    next_sequence y next_tx_id son contadores del planificador y no forman
    parte de la igualdad estructural.
    """

    engines: List[EngineState]
    mempools: List[Mempool]
    programs: List[Optional[Stmt]]
    global_store: ByteStore
    params: SystemParams
    next_sequence: int = 1
    next_tx_id: int = 1

    def engine(self, index: int) -> EngineState:
        return self.engines[index - 1]

    def mempool(self, index: int) -> Mempool:
        return self.mempools[index - 1]

    def engine_indices(self) -> range:
        return range(1, self.params.n + 1)

    def take_sequence(self) -> int:
        value = self.next_sequence
        self.next_sequence += 1
        return value

    def take_tx_id(self) -> int:
        value = self.next_tx_id
        self.next_tx_id += 1
        return value

    def pending(self) -> int:
        return sum(len(pool) for pool in self.mempools)

    def memory_empty(self) -> bool:
        return all(engine.memory.is_empty() for engine in self.engines)

    def copy(self) -> "Configuration":
        return Configuration(
            engines=[engine.copy() for engine in self.engines],
            mempools=[pool.copy() for pool in self.mempools],
            programs=list(self.programs),
            global_store=self.global_store.copy(),
            params=self.params,
            next_sequence=self.next_sequence,
            next_tx_id=self.next_tx_id,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return (
            self.params == other.params
            and self.engines == other.engines
            and self.mempools == other.mempools
            and self.programs == other.programs
            and self.global_store == other.global_store
        )

    __hash__ = None

def new_configuration(params: SystemParams) -> Configuration:
    """Configuración inicial: stores vacíos, pilas vacías, mempools vacíos"""
    return Configuration(
        engines=[EngineState(params.k) for _ in range(params.n)],
        mempools=[Mempool() for _ in range(params.n)],
        programs=[None] * params.n,
        global_store=ByteStore(),
        params=params,
    )
