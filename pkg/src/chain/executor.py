"""
Despliegue de contratos y ejecución atómica de transacciones.

Cada transacción trabaja sobre una copia de la configuración. Si falla, se
devuelve el pre-estado (los relays que emitió se descartan) y el veredicto
reverted; si es un relay, igualmente queda consumido de su mempool.
"""

from __future__ import annotations

from typing import Optional

from config.constants import Config
from src.checker import check_contract
from src.chain.results import APPLIED, REVERTED, TransactionResult, Verdict
from src.errors import (
    CrystalityError, DeploymentError, ExecutionError, InvalidSender, MemoryNotEmpty,
    Nontermination,
)
from src.semantics.context import ExecutionContext
from src.semantics.engine import RuleEngine
from src.semantics.trace import TraceRecorder
from src.state.model import Configuration, TargetKind
from src.state.registry import FunctionRegistry
from src.state.transactions import TransactionEnvelope, get_sender_address
from src.syntax.nodes import Call, ContractDecl, Literal
from src.syntax.types import ScopeTag
from utils.helpers import setup_logging

logger = setup_logging(__name__)

def deploy(cfg: Configuration, contract: ContractDecl,
           registry: Optional[FunctionRegistry] = None,
           recorder: Optional[TraceRecorder] = None) -> Configuration:
    """
    Ejecuta las declaraciones de estado del contrato.

    Las declaraciones @address y @engine se ejecutan en los n engines; las
    @global una única vez sobre G.

    Args:
        cfg: Configuración de partida (no se modifica)
        contract: Contrato ya parseado
        registry: Registro Λ; si no se indica se construye con el checker
        recorder: Traza opcional

    Returns:
        Nueva configuración con las variables declaradas

    Raises:
        DeploymentError: Si el checker reporta errores
        AlreadyDefined: Si una variable ya existe en algún store destino
    """
    logger.info(f"[>] Desplegando contrato {contract.name}...")
    result = check_contract(contract)
    if not result.ok:
        detalle = "; ".join(str(d) for d in result.errors)
        raise DeploymentError(f"{contract.name}: {len(result.errors)} errores ({detalle})")
    registry = registry if registry is not None else result.registry

    work = cfg.copy()
    engine = RuleEngine(ExecutionContext(cfg=work, registry=registry, recorder=recorder))
    for decl in contract.state_vars:
        if decl.scope is ScopeTag.GLOBAL:
            engine.declare_state_var(1, decl)
        else:
            for i in work.engine_indices():
                engine.declare_state_var(i, decl)

    if recorder is not None:
        recorder.event("deploy", contract=contract.name,
                       state_vars=[d.name for d in contract.state_vars],
                       functions=list(registry.names()))
    logger.info(f"[OK] {contract.name} desplegado: {len(contract.state_vars)} variables de estado")
    return work

def _consume(cfg: Configuration, tx: TransactionEnvelope) -> None:
    """Quita el relay de los mempools donde se ejecuta"""
    if not tx.is_relay:
        return
    relay = tx.relay
    if relay.target.kind is TargetKind.GLOBAL:
        pools = cfg.mempools
    else:
        pools = [cfg.mempool(tx.engine)]
    for pool in pools:
        if relay in pool.entries:
            pool.remove(relay)

def execute_transaction(cfg: Configuration, tx: TransactionEnvelope, registry: FunctionRegistry,
                        recorder: Optional[TraceRecorder] = None,
                        budget: Optional[int] = None) -> TransactionResult:
    """
    Ejecuta una transacción (llamada a una T-función) de forma atómica.

    Args:
        cfg: Configuración de partida (no se modifica)
        tx: Transacción de usuario o relay
        registry: Registro Λ del contrato desplegado
        recorder: Traza opcional
        budget: Presupuesto de pasos (por defecto Config.STEP_BUDGET)

    Returns:
        TransactionResult(config, verdict, emitted); el simulador nunca aborta
    """
    work = cfg.copy()
    tx_id = tx.id or work.take_tx_id()
    _consume(work, tx)
    ctx = ExecutionContext(
        cfg=work,
        registry=registry,
        tx_id=tx_id,
        budget=budget if budget is not None else Config.STEP_BUDGET,
        recorder=recorder,
    )
    engine_index: Optional[int] = tx.engine
    value = None
    error: Optional[CrystalityError] = None

    try:
        if not cfg.memory_empty():
            raise MemoryNotEmpty(tx.func, "pila de memoria no vacía al iniciar la transacción")
        info = registry.get(tx.func)
        i, j = get_sender_address(tx, work.params)
        engine_index = i
        work.programs[i - 1] = Call(tx.func, tuple(Literal(arg) for arg in tx.args))
        value = RuleEngine(ctx).transaction(i, j, info, tx.args)
        work.programs[i - 1] = None
        if not work.memory_empty():
            raise MemoryNotEmpty(tx.func, "pila de memoria no vacía al terminar la transacción")
    except (ExecutionError, InvalidSender) as exc:
        error = exc
    except RecursionError:
        error = Nontermination(tx.func, "profundidad de recursión agotada")

    if error is None:
        verdict = Verdict(tx_id, tx.func, APPLIED, engine_index, value=value, relay=tx.is_relay)
        result = TransactionResult(work, verdict, tuple(ctx.emitted))
        logger.debug(f"[OK] tx {tx_id} {tx.describe()} aplicada ({len(ctx.emitted)} entregas)")
    else:
        rollback = cfg.copy()
        rollback.next_tx_id = work.next_tx_id
        _consume(rollback, tx)
        verdict = Verdict(tx_id, tx.func, REVERTED, engine_index, error=error, relay=tx.is_relay)
        result = TransactionResult(rollback, verdict, ())
        logger.debug(f"[~] tx {tx_id} {tx.describe()} revertida: {error}")

    if recorder is not None:
        recorder.event("verdict", **verdict.to_json())
    return result
