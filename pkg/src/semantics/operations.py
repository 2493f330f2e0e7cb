"""
Operaciones públicas de la semántica.

Cada operación trabaja sobre una copia de la configuración y devuelve un
StepOutcome: el post-estado y los relays emitidos, o el pre-estado intacto
con status FAULT y el error correspondiente.
"""

from __future__ import annotations

from typing import Any, Callable, Optional, Sequence, Tuple

from config.constants import Config
from src.errors import ExecutionError, GlobalDivergence, Nontermination
from src.semantics.context import ExecutionContext
from src.semantics.engine import RuleEngine
from src.semantics.outcome import Status, StepOutcome
from src.semantics.trace import TraceRecorder
from src.state.model import Configuration, ScopeKind
from src.state.registry import FunctionRegistry
from src.syntax.nodes import Exp, If, Relay, Seq, StateVarDecl, Stmt, While
from src.syntax.types import ScopeTag, TypeName
from utils.helpers import setup_logging

logger = setup_logging(__name__)

def _run(cfg: Configuration, registry: Optional[FunctionRegistry],
         body: Callable[[RuleEngine], Any], *, tx_id: int = 0,
         budget: Optional[int] = None,
         recorder: Optional[TraceRecorder] = None) -> Tuple[StepOutcome, Any]:
    work = cfg.copy()
    ctx = ExecutionContext(
        cfg=work,
        registry=registry if registry is not None else FunctionRegistry(),
        tx_id=tx_id,
        budget=budget if budget is not None else Config.STEP_BUDGET,
        recorder=recorder,
    )
    try:
        value = body(RuleEngine(ctx))
    except ExecutionError as error:
        logger.debug(f"[!] {error}")
        return StepOutcome(cfg.copy(), (), Status.FAULT, error), None
    except RecursionError:
        error = Nontermination("llamadas", "profundidad de recursión agotada")
        logger.debug(f"[!] {error}")
        return StepOutcome(cfg.copy(), (), Status.FAULT, error), None
    return StepOutcome(work, tuple(ctx.emitted), Status.DONE), value

def declare_state_var(cfg: Configuration, i: int, decl: StateVarDecl,
                      recorder: Optional[TraceRecorder] = None) -> StepOutcome:
    """
    Declara una variable de estado en el engine i (o en G si es @global).

    Falla con AlreadyDefined si el nombre ya existe en alguno de los stores destino.
    """
    outcome, _ = _run(cfg, None, lambda engine: engine.declare_state_var(i, decl), recorder=recorder)
    return outcome

def declare_temp(cfg: Configuration, i: int, type_name: TypeName, name: str) -> StepOutcome:
    """Declara un temporal en la capa superior de Mi"""
    outcome, _ = _run(cfg, None, lambda engine: engine.local_or_joint(
        i, lambda e, l: e.declare_temp(l, type_name, name)))
    return outcome

def assign(cfg: Configuration, i: int, name: str, exp: Exp,
           registry: Optional[FunctionRegistry] = None) -> StepOutcome:
    """Asigna exp a un temporal o a una variable de estado visible"""
    outcome, _ = _run(cfg, registry, lambda engine: engine.local_or_joint(
        i, lambda e, l: e.assign(l, name, exp, exp.span)))
    return outcome

def evaluate(cfg: Configuration, i: int, exp: Exp,
             registry: Optional[FunctionRegistry] = None) -> Tuple[StepOutcome, Optional[Any]]:
    """
    Evalúa una expresión en el marco superior de Mi.

    Returns:
        Tupla (StepOutcome, TypedValue o None si falla). La configuración
        cambia si la expresión llama funciones que escriben estado.
    """
    return _run(cfg, registry, lambda engine: engine.local_or_joint(
        i, lambda e, l: e.evaluate(l, exp)))

def call(cfg: Configuration, i: int, idf: str, args: Sequence[Exp],
         registry: FunctionRegistry) -> StepOutcome:
    """Llamada interna a una función sin valor de retorno desde el marco superior"""
    outcome, _ = _run(cfg, registry, lambda engine: engine.local_or_joint(
        i, lambda e, l: e.invoke(l, idf, tuple(args), want_value=False)))
    return outcome

def relay(cfg: Configuration, i: int, stmt: Relay, registry: FunctionRegistry) -> StepOutcome:
    """Emite un relay desde el marco superior de Mi"""
    outcome, _ = _run(cfg, registry, lambda engine: engine.local_or_joint(
        i, lambda e, l: e.relay(l, stmt)))
    return outcome

def exec_stmt(cfg: Configuration, i: int, stmt: Stmt, registry: FunctionRegistry,
              budget: Optional[int] = None,
              recorder: Optional[TraceRecorder] = None) -> StepOutcome:
    """Ejecuta una sentencia completa en el engine i"""
    outcome, _ = _run(cfg, registry, lambda engine: engine.local_or_joint(
        i, lambda e, l: e.execute(l, stmt)), budget=budget, recorder=recorder)
    return outcome

def _split(prog: Stmt) -> Tuple[Stmt, Optional[Stmt]]:
    """Separa la primera sentencia del resto del programa"""
    if isinstance(prog, Seq):
        head, rest = _split(prog.first)
        return head, prog.second if rest is None else Seq(rest, prog.second)
    return prog, None

def _then(stmt: Optional[Stmt], rest: Optional[Stmt]) -> Optional[Stmt]:
    if stmt is None:
        return rest
    return stmt if rest is None else Seq(stmt, rest)

def _lockstep(cfg: Configuration, i: int, head: Stmt) -> bool:
    """Un paso es conjunto si declara una variable @global o corre en un marco global"""
    if isinstance(head, StateVarDecl):
        return head.scope is ScopeTag.GLOBAL
    memory = cfg.engine(i).memory
    return not memory.is_empty() and memory.top().scope.kind is ScopeKind.GLOBAL

def step(cfg: Configuration, i: int, registry: FunctionRegistry) -> StepOutcome:
    """
    Un paso pequeño sobre el slot de programa Progi.

    Condicionales y bucles se despliegan sin ejecutar su cuerpo; el resto de
    las sentencias primitivas se ejecutan completas. Un paso global exige que
    los n slots tengan la misma sentencia en cabeza y los avanza juntos.

    Returns:
        PROGRESS si queda programa en el slot i, DONE si quedó vacío
    """
    prog = cfg.programs[i - 1]
    if prog is None:
        return StepOutcome(cfg.copy(), (), Status.DONE)
    head, rest = _split(prog)
    joint = _lockstep(cfg, i, head)
    slots = list(cfg.engine_indices()) if joint else [i]
    rests = {}
    for l in slots:
        other = cfg.programs[l - 1]
        other_head, other_rest = _split(other) if other is not None else (None, None)
        if other_head != head:
            error = GlobalDivergence(f"engine {l}", f"el slot de programa difiere del engine {i}", head.span)
            logger.debug(f"[!] {error}")
            return StepOutcome(cfg.copy(), (), Status.FAULT, error)
        rests[l] = other_rest

    def condition(engine: RuleEngine, exp: Exp) -> bool:
        if joint:
            return engine.local_or_joint(i, lambda e, l: e.condition(l, exp))
        return engine.condition(i, exp)

    def body(engine: RuleEngine) -> Optional[Stmt]:
        if isinstance(head, StateVarDecl):
            engine.declare_state_var(i, head)
            return None
        if isinstance(head, If):
            taken = condition(engine, head.cond)
            engine.trace(0 if joint else i, "COND1" if taken else "COND2", head.span)
            return head.then if taken else head.orelse
        if isinstance(head, While):
            if condition(engine, head.cond):
                engine.trace(0 if joint else i, "WHILE2", head.span)
                return Seq(head.body, head)
            engine.trace(0 if joint else i, "WHILE1", head.span)
            return None
        engine.local_or_joint(i, lambda e, l: e.execute(l, head))
        return None

    outcome, unfolded = _run(cfg, registry, body)
    if not outcome.ok:
        return outcome
    for l in slots:
        outcome.config.programs[l - 1] = _then(unfolded, rests[l])
    remaining = outcome.config.programs[i - 1]
    outcome.status = Status.PROGRESS if remaining is not None else Status.DONE
    return outcome
