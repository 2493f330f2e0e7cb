"""
Planificador: vaciado de mempools por rondas y ejecución de lotes.

Cada engine tiene una cola de unidades de trabajo. Una unidad compartida
(un relay @global presente en todos los mempools) solo es ejecutable cuando
encabeza la cola de todos los engines que la contienen: es la barrera del
paso global conjunto. Entre unidades ejecutables, la política serial rota
por engines en orden y la política interleaved elige con un RNG sembrado.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Deque, Dict, List, Optional, Sequence, Tuple

from config.constants import Config
from src.chain.executor import execute_transaction
from src.chain.results import ExecutionTrace, TransactionResult
from src.errors import RoundBudgetExceeded
from src.semantics.trace import TraceRecorder
from src.state.model import Configuration, RelayTransaction, TargetKind
from src.state.registry import FunctionRegistry
from src.state.transactions import TransactionEnvelope
from src.syntax.types import ScopeTag
from utils.helpers import setup_logging

logger = setup_logging(__name__)

class SchedulingPolicy(Enum):
    SERIAL = "serial"
    INTERLEAVED = "interleaved"

    @classmethod
    def parse(cls, value) -> "SchedulingPolicy":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"política de planificación desconocida: {value}") from None

@dataclass(eq=False)
class _Unit:
    """Unidad de trabajo; holders son los engines en cuya cola aparece"""
    holders: Tuple[int, ...]
    envelope: TransactionEnvelope

class _Scheduler:
    def __init__(self, policy: SchedulingPolicy, rng: random.Random):
        self.policy = policy
        self.rng = rng
        self.turn = 1

    def run(self, queues: Dict[int, List[_Unit]], execute: Callable[[_Unit], None]) -> None:
        cursors: Dict[int, Deque[_Unit]] = {r: deque(q) for r, q in queues.items() if q}
        while cursors:
            ready = self._ready(cursors)
            unit = self._choose(ready) if ready else cursors[min(cursors)][0]
            execute(unit)
            for r in unit.holders:
                if r in cursors:
                    cursors[r].remove(unit)
                    if not cursors[r]:
                        del cursors[r]

    def _ready(self, cursors: Dict[int, Deque[_Unit]]) -> List[_Unit]:
        ready: List[_Unit] = []
        for r in sorted(cursors):
            head = cursors[r][0]
            if head in ready:
                continue
            if all(cursors[s][0] is head for s in head.holders if s in cursors):
                ready.append(head)
        return ready

    def _choose(self, ready: List[_Unit]) -> _Unit:
        if self.policy is SchedulingPolicy.INTERLEAVED:
            return self.rng.choice(ready)
        ready = sorted(ready, key=lambda unit: unit.holders[0])
        for unit in ready:
            if unit.holders[0] >= self.turn:
                break
        else:
            unit = ready[0]
        self.turn = unit.holders[0] + 1
        return unit

class _Runner:
    """Acumula configuración y veredictos mientras el planificador ejecuta unidades"""

    def __init__(self, cfg: Configuration, registry: FunctionRegistry,
                 recorder: Optional[TraceRecorder], budget: Optional[int]):
        self.cfg = cfg
        self.registry = registry
        self.recorder = recorder
        self.budget = budget
        self.trace = ExecutionTrace()

    def __call__(self, unit: _Unit) -> None:
        result: TransactionResult = execute_transaction(
            self.cfg, unit.envelope, self.registry, self.recorder, self.budget)
        self.cfg = result.config
        self.trace.verdicts.append(result.verdict)

def _relay_queues(cfg: Configuration) -> Dict[int, List[_Unit]]:
    """Unidades presentes al inicio de la ronda; un relay @global es una sola unidad"""
    shared: Dict[RelayTransaction, _Unit] = {}
    queues: Dict[int, List[_Unit]] = {}
    for r in cfg.engine_indices():
        queue = []
        for relay in cfg.mempool(r):
            if relay.target.kind is TargetKind.GLOBAL:
                if relay not in shared:
                    holders = tuple(s for s in cfg.engine_indices() if relay in cfg.mempool(s).entries)
                    shared[relay] = _Unit(holders, TransactionEnvelope.from_relay(relay, relay.origin[0] or r))
                unit = shared[relay]
            else:
                unit = _Unit((r,), TransactionEnvelope.from_relay(relay, r))
            queue.append(unit)
        queues[r] = queue
    return queues

def drain_relays(cfg: Configuration, registry: FunctionRegistry,
                 policy="serial", seed: Optional[int] = None,
                 recorder: Optional[TraceRecorder] = None,
                 round_budget: Optional[int] = None,
                 budget: Optional[int] = None) -> Tuple[Configuration, ExecutionTrace]:
    """
    Ejecuta relays hasta vaciar los mempools.

    Cada ronda ejecuta los relays presentes al iniciarla; los emitidos durante
    la ronda se ejecutan en la siguiente.

    Args:
        cfg: Configuración de partida (no se modifica)
        registry: Registro Λ
        policy: serial | interleaved
        seed: Semilla de la política interleaved (por defecto la de params)
        recorder: Traza opcional
        round_budget: Máximo de rondas (por defecto Config.ROUND_BUDGET)
        budget: Presupuesto de pasos por transacción

    Returns:
        Tupla (configuración final, ExecutionTrace con los veredictos)

    Raises:
        RoundBudgetExceeded: Si quedan relays tras agotar las rondas
    """
    policy = SchedulingPolicy.parse(policy)
    seed = cfg.params.seed if seed is None else seed
    round_budget = Config.ROUND_BUDGET if round_budget is None else round_budget
    scheduler = _Scheduler(policy, random.Random(seed))
    runner = _Runner(cfg, registry, recorder, budget)

    rounds = 0
    while runner.cfg.pending():
        if rounds >= round_budget:
            raise RoundBudgetExceeded(rounds, runner.cfg.pending())
        rounds += 1
        queues = _relay_queues(runner.cfg)
        logger.debug(f"[>] Ronda {rounds}: {sum(len(q) for q in queues.values())} unidades")
        scheduler.run(queues, runner)

    if recorder is not None:
        recorder.event("drain", policy=policy.value, seed=seed, rounds=rounds,
                       executed=len(runner.trace.verdicts))
    logger.debug(f"[OK] Mempools vacíos tras {rounds} rondas")
    runner.trace.final = runner.cfg
    runner.trace.records = list(recorder.records) if recorder is not None else []
    return runner.cfg, runner.trace

def execute_batch(cfg: Configuration, txs: Sequence[TransactionEnvelope], registry: FunctionRegistry,
                  policy="serial", seed: Optional[int] = None,
                  recorder: Optional[TraceRecorder] = None,
                  budget: Optional[int] = None) -> Tuple[Configuration, ExecutionTrace]:
    """
    Ejecuta un lote ordenado de transacciones de usuario.

    Cada transacción va a la cola del engine de su remitente y conserva el
    orden relativo dentro de esa cola. Una transacción @global entra en la
    cola de todos los engines y solo se ejecuta cuando las encabeza a todas:
    espera a las anteriores del lote y las posteriores la esperan a ella.

    Returns:
        Tupla (configuración final, ExecutionTrace con los veredictos)
    """
    policy = SchedulingPolicy.parse(policy)
    seed = cfg.params.seed if seed is None else seed
    queues: Dict[int, List[_Unit]] = {}
    for tx in txs:
        if tx.func in registry and registry.scope(tx.func) is ScopeTag.GLOBAL:
            unit = _Unit(tuple(cfg.engine_indices()), tx)
            logger.debug(f"[~] {tx.describe()} es una barrera en todas las colas")
        else:
            unit = _Unit((tx.sender[0] if tx.sender else 1,), tx)
        for engine in unit.holders:
            queues.setdefault(engine, []).append(unit)

    runner = _Runner(cfg, registry, recorder, budget)
    _Scheduler(policy, random.Random(seed)).run(queues, runner)
    runner.trace.final = runner.cfg
    runner.trace.records = list(recorder.records) if recorder is not None else []
    return runner.cfg, runner.trace
