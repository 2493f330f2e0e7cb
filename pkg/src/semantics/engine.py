"""
Motor de reglas de la semántica operacional.

RuleEngine aplica las reglas sobre ExecutionContext.cfg en el lugar. Quien
lo invoca es responsable de copiar la configuración antes y de descartarla
si se propaga un ExecutionError (ver operations.py y src/chain).
"""

from __future__ import annotations

from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from src.errors import (
    ArityMismatch, ExecutionError, GlobalDivergence, InvalidAddress,
    Nontermination, ScopeViolation, TypeMismatch, UndefinedVariable,
)
from src.semantics.builtins import apply_builtin
from src.semantics.context import ExecutionContext
from src.semantics.outcome import Delivery
from src.state.model import (
    Configuration, MemoryLayer, RelayTarget, RelayTransaction, ScopeBinding, ScopeKind,
    new_ID,
)
from src.state.registry import FunctionInfo
from src.store.bytestore import ByteStore, init
from src.syntax.nodes import (
    AtEngines, AtExp, AtGlobal, Assign, BuiltinOp, Call, CallExp, Exp, Ident, If, Literal,
    Relay, Return, Seq, Skip, StateVarDecl, Stmt, TempDecl, While, contains_call,
)
from src.syntax.printer import format_exp
from src.syntax.types import ScopeTag, TypeName, TypedValue

T = TypeVar("T")

# (scope del marco, scope de la función llamada) -> sufijo de la regla
_CALL_SUFFIX = {
    (ScopeKind.ADDRESS, ScopeTag.ADDRESS): "aa",
    (ScopeKind.ADDRESS, ScopeTag.ENGINE): "as",
    (ScopeKind.ENGINE, ScopeTag.ENGINE): "ss",
    (ScopeKind.GLOBAL, ScopeTag.GLOBAL): "gg",
}

_TX_SUFFIX = {ScopeTag.ADDRESS: "ta", ScopeTag.ENGINE: "ts", ScopeTag.GLOBAL: "tg"}

class RuleEngine:
    """Aplica las reglas de sentencias, expresiones, llamadas y relays"""

    def __init__(self, ctx: ExecutionContext):
        self.ctx = ctx

    @property
    def cfg(self) -> Configuration:
        return self.ctx.cfg

    # ------------------------------------------------------------------
    # Traza y presupuesto
    # ------------------------------------------------------------------

    def trace(self, engine: int, rule: str, span=None, emitted: Sequence[Delivery] = ()) -> None:
        if self.ctx.recorder is not None:
            self.ctx.recorder.step(self.ctx.tx_id, 0 if self.ctx.joint else engine,
                                   rule, span, emitted)

    def _tick(self, subject: str, span=None) -> None:
        self.ctx.steps += 1
        if self.ctx.steps > self.ctx.budget:
            raise Nontermination(subject, f"presupuesto de {self.ctx.budget} pasos agotado", span)

    def frame(self, i: int) -> MemoryLayer:
        memory = self.cfg.engine(i).memory
        if memory.is_empty():
            raise ScopeViolation(f"engine {i}", "no hay marco de ejecución activo")
        return memory.top()

    # ------------------------------------------------------------------
    # Declaraciones
    # ------------------------------------------------------------------

    def declare_state_var(self, i: int, decl: StateVarDecl) -> None:
        """SDa / SDs / SDg: declara e inicializa una variable de estado"""
        value = init(decl.type_name)
        engine = self.cfg.engine(i)
        if decl.scope is ScopeTag.ADDRESS:
            targets, rule = engine.address_stores, "SDa"
        elif decl.scope is ScopeTag.ENGINE:
            targets, rule = [engine.engine_store], "SDs"
        else:
            targets, rule = [self.cfg.global_store], "SDg"
        for store in targets:
            store.allocate(decl.type_name, decl.name)
            store.set(decl.name, value)
        self.trace(0 if rule == "SDg" else i, rule, decl.span)

    def declare_temp(self, i: int, type_name: TypeName, name: str, span=None) -> None:
        """TD: declara un temporal en la capa superior"""
        store = self.frame(i).store
        store.allocate(type_name, name)
        store.set(name, init(type_name))
        self.trace(i, "TD", span)

    # ------------------------------------------------------------------
    # Lectura y escritura de identificadores
    # ------------------------------------------------------------------

    def _state_candidates(self, i: int, scope: ScopeBinding, write: bool) -> List[Tuple[ByteStore, str]]:
        """Stores visibles desde el marco, en orden de búsqueda, con su regla"""
        engine = self.cfg.engine(i)
        G = self.cfg.global_store
        if scope.kind is ScopeKind.ADDRESS:
            visible = [(engine.address_store(scope.index), "aa"), (engine.engine_store, "as")]
            if not write:
                visible.append((G, "ag"))
        elif scope.kind is ScopeKind.ENGINE:
            visible = [(engine.engine_store, "ss")]
            if not write:
                visible.append((G, "sg"))
        elif scope.kind is ScopeKind.GLOBAL:
            visible = [(G, "gg")]
        else:
            visible = []
        return visible

    def _forbidden(self, i: int, scope: ScopeBinding, name: str, write: bool) -> ExecutionError:
        engine = self.cfg.engine(i)
        stores = [*engine.address_stores, engine.engine_store, self.cfg.global_store]
        if any(name in store for store in stores):
            action = "escribir" if write else "leer"
            return ScopeViolation(name, f"un marco {scope.label} no puede {action} esta variable")
        return UndefinedVariable(name)

    def lookup(self, i: int, name: str) -> TypedValue:
        """TE / SE**: temporal de la capa superior o variable de estado visible"""
        layer = self.frame(i)
        if name in layer.store:
            return layer.store.get(name)
        for store, _suffix in self._state_candidates(i, layer.scope, write=False):
            if name in store:
                return store.get(name)
        raise self._forbidden(i, layer.scope, name, write=False)

    def write(self, i: int, name: str, value: TypedValue) -> str:
        """Escribe un temporal o una variable de estado; devuelve la regla aplicada"""
        layer = self.frame(i)
        if name in layer.store:
            layer.store.set(name, value)
            return "TAg" if layer.scope.kind is ScopeKind.GLOBAL else "TA"
        for store, suffix in self._state_candidates(i, layer.scope, write=True):
            if name in store:
                store.set(name, value)
                return f"SA{suffix}"
        raise self._forbidden(i, layer.scope, name, write=True)

    def assign(self, i: int, name: str, exp: Exp, span=None, rule: Optional[str] = None) -> None:
        value = self.evaluate(i, exp)
        applied = self.write(i, name, value)
        self.trace(i, rule or applied, span)

    # ------------------------------------------------------------------
    # Expresiones
    # ------------------------------------------------------------------

    def evaluate(self, i: int, exp: Exp) -> TypedValue:
        try:
            if isinstance(exp, Literal):
                return exp.value
            if isinstance(exp, Ident):
                return self.lookup(i, exp.name)
            if isinstance(exp, BuiltinOp):
                left = self.evaluate(i, exp.left)
                right = self.evaluate(i, exp.right)
                return apply_builtin(exp.op, left, right, format_exp(exp))
            if isinstance(exp, CallExp):
                return self.invoke(i, exp.func, exp.args, exp.span, want_value=True)
        except ExecutionError as error:
            raise error.with_span(exp.span)
        raise TypeMismatch(type(exp).__name__, "expresión desconocida", exp.span)

    def condition(self, i: int, exp: Exp) -> bool:
        value = self.evaluate(i, exp)
        if value.type_name is not TypeName.BOOL:
            raise TypeMismatch(format_exp(exp), "la condición no es bool", exp.span)
        return value.payload

    # ------------------------------------------------------------------
    # Llamadas
    # ------------------------------------------------------------------

    def _callee_binding(self, caller: ScopeBinding, info: FunctionInfo) -> Tuple[ScopeBinding, str]:
        suffix = _CALL_SUFFIX.get((caller.kind, info.scope))
        if suffix is None:
            raise ScopeViolation(info.name, f"{caller.label} no puede llamar a {info.scope.label}")
        if info.scope is ScopeTag.ADDRESS:
            return ScopeBinding.address(caller.index), suffix
        if info.scope is ScopeTag.ENGINE:
            return ScopeBinding.engine(), suffix
        return ScopeBinding.global_(), suffix

    def _check_arguments(self, info: FunctionInfo, values: Sequence[TypedValue]) -> None:
        if len(values) != info.arity:
            raise ArityMismatch(info.name, f"se esperaban {info.arity} argumentos, se recibieron {len(values)}")
        for name, expected, value in zip(info.paraname, info.paratype, values):
            if value.type_name is not expected:
                raise TypeMismatch(info.name, f"{name}: se esperaba {expected.value}, se recibió {value.type_name.value}")

    def invoke(self, i: int, idf: str, args: Sequence[Exp], span=None, want_value: bool = False) -> Optional[TypedValue]:
        """IF** (sentencia) / EF** (expresión): llamada interna desde el marco superior"""
        info = self.ctx.registry.get(idf)
        if want_value and info.rttype is None:
            raise TypeMismatch(idf, "la función no devuelve valor")
        if not want_value and info.rttype is not None:
            raise TypeMismatch(idf, "la función devuelve valor; usarla como expresión")
        callee, suffix = self._callee_binding(self.frame(i).scope, info)
        values = [self.evaluate(i, arg) for arg in args]
        self._check_arguments(info, values)
        self.trace(i, ("EF" if want_value else "IF") + suffix, span)
        return self.enter(i, info, callee, values, inherit=True)

    def enter(self, i: int, info: FunctionInfo, scope: ScopeBinding,
              values: Sequence[TypedValue], inherit: bool) -> Optional[TypedValue]:
        """
        Apila el marco de la función, ejecuta el prólogo y el cuerpo y desapila.

        Con inherit la capa nueva parte de una copia de la del llamador sin los
        nombres de los parámetros; las T-funciones parten de una capa vacía.
        """
        self._check_arguments(info, values)
        memory = self.cfg.engine(i).memory
        if inherit:
            store = memory.top().store.copy()
            store.forget(info.paraname)
        else:
            store = ByteStore()

        rt = None
        if info.rttype is not None:
            rt = new_ID(MemoryLayer(store, scope))
        memory.push(MemoryLayer(store, scope, rt))

        for name, type_name, value in zip(info.paraname, info.paratype, values):
            store.allocate(type_name, name)
            store.set(name, value)
        if rt is not None:
            store.allocate(info.rttype, rt)
            store.set(rt, init(info.rttype))

        self.execute(i, info.body)

        result = memory.top().store.get(rt) if rt is not None else None
        memory.pop()
        return result

    def transaction(self, i: int, j: int, info: FunctionInfo,
                    values: Sequence[TypedValue]) -> Optional[TypedValue]:
        """IFt* / EFt*: invocación de una T-función con la pila del engine vacía"""
        self._check_arguments(info, values)
        rule = ("EF" if info.rttype is not None else "IF") + _TX_SUFFIX[info.scope]
        if info.scope is ScopeTag.GLOBAL:
            self.trace(0, rule)
            return self.run_joint(
                lambda replica, l: replica.enter(l, info, ScopeBinding.global_(), values, inherit=False),
                primary=i,
            )
        self.trace(i, rule)
        if info.scope is ScopeTag.ADDRESS:
            return self.enter(i, info, ScopeBinding.address(j), values, inherit=False)
        return self.enter(i, info, ScopeBinding.engine(), values, inherit=False)

    # ------------------------------------------------------------------
    # Relays
    # ------------------------------------------------------------------

    def relay(self, i: int, stmt: Relay) -> None:
        """RELa / RELs / RELg1 / RELg2: encola un relay en los mempools destino"""
        info = self.ctx.registry.get(stmt.func)
        layer = self.frame(i)
        target = stmt.target

        if isinstance(target, AtExp):
            if info.scope is not ScopeTag.ADDRESS:
                raise ScopeViolation(stmt.func, "@exp solo puede apuntar a funciones @address")
            if contains_call(target.exp):
                raise TypeMismatch(format_exp(target.exp), "el destino de un relay no puede llamar funciones")
            address = self.evaluate(i, target.exp)
            if address.type_name is not TypeName.ADDRESS:
                raise TypeMismatch(format_exp(target.exp), "el destino de un relay debe ser address")
            r, j = address.payload
            if not self.cfg.params.valid_address(r, j):
                raise InvalidAddress(format_exp(target.exp), f"({r}, {j}) fuera de la topología")
            relay_target, engines, rule = RelayTarget.address(j), [r], "RELa"
        elif isinstance(target, AtEngines):
            if info.scope is not ScopeTag.ENGINE:
                raise ScopeViolation(stmt.func, "@engines solo puede apuntar a funciones @engine")
            relay_target, engines, rule = RelayTarget.engine(), list(self.cfg.engine_indices()), "RELs"
        elif isinstance(target, AtGlobal):
            if info.scope is not ScopeTag.GLOBAL:
                raise ScopeViolation(stmt.func, "@global solo puede apuntar a funciones @global")
            if layer.scope.kind is ScopeKind.ADDRESS:
                rule = "RELg1"
            elif layer.scope.kind is ScopeKind.ENGINE:
                rule = "RELg2"
            else:
                raise ScopeViolation(stmt.func, "un marco global no puede emitir relays @global")
            relay_target, engines = RelayTarget.global_(), list(self.cfg.engine_indices())
        else:
            raise TypeMismatch(type(target).__name__, "destino de relay desconocido")

        for arg in stmt.args:
            if contains_call(arg):
                raise TypeMismatch(format_exp(arg), "los argumentos de un relay no pueden llamar funciones")
        values = tuple(self.evaluate(i, arg) for arg in stmt.args)
        self._check_arguments(info, values)

        origin_address = layer.scope.index if layer.scope.kind is ScopeKind.ADDRESS else 0
        relay = RelayTransaction(
            target=relay_target,
            func=stmt.func,
            args=values,
            origin=(i, origin_address),
            sequence=self.cfg.take_sequence(),
            arrival=self.ctx.tx_id,
        )
        deliveries = []
        for r in engines:
            self.cfg.mempool(r).add(relay)
            deliveries.append(Delivery(r, relay))
        self.ctx.emitted.extend(deliveries)
        self.trace(i, rule, stmt.span, deliveries)

    # ------------------------------------------------------------------
    # Sentencias
    # ------------------------------------------------------------------

    def execute(self, i: int, stmt: Stmt) -> None:
        """Ejecuta una sentencia completa en el engine i"""
        if isinstance(stmt, Seq):
            self.execute(i, stmt.first)
            self.execute(i, stmt.second)
            return
        self._tick(type(stmt).__name__, stmt.span)
        try:
            self._execute_one(i, stmt)
        except ExecutionError as error:
            raise error.with_span(stmt.span)

    def _execute_one(self, i: int, stmt: Stmt) -> None:
        if isinstance(stmt, Skip):
            self.trace(i, "SKIP", stmt.span)
        elif isinstance(stmt, TempDecl):
            self.declare_temp(i, stmt.type_name, stmt.name, stmt.span)
        elif isinstance(stmt, Assign):
            self.assign(i, stmt.name, stmt.exp, stmt.span)
        elif isinstance(stmt, Return):
            layer = self.frame(i)
            if layer.rt is None:
                raise TypeMismatch("return", "la función no declara valor de retorno")
            self.assign(i, layer.rt, stmt.exp, stmt.span, rule="RET")
        elif isinstance(stmt, Call):
            self.invoke(i, stmt.func, stmt.args, stmt.span, want_value=False)
        elif isinstance(stmt, Relay):
            self.relay(i, stmt)
        elif isinstance(stmt, If):
            if self.condition(i, stmt.cond):
                self.trace(i, "COND1", stmt.span)
                self.execute(i, stmt.then)
            else:
                self.trace(i, "COND2", stmt.span)
                self.execute(i, stmt.orelse)
        elif isinstance(stmt, While):
            while self.condition(i, stmt.cond):
                self.trace(i, "WHILE2", stmt.span)
                self.execute(i, stmt.body)
                self._tick("while", stmt.span)
            self.trace(i, "WHILE1", stmt.span)
        else:
            raise TypeMismatch(type(stmt).__name__, "sentencia desconocida")

    # ------------------------------------------------------------------
    # Pasos globales conjuntos
    # ------------------------------------------------------------------

    def local_or_joint(self, i: int, op: Callable[["RuleEngine", int], T]) -> T:
        """
        Ejecuta op en el engine i; si el marco superior es global y no se está
        ya dentro de un paso conjunto, lo replica en todos los engines.
        """
        layer = self.frame(i)
        if self.ctx.joint or layer.scope.kind is not ScopeKind.GLOBAL:
            return op(self, i)

        def action(replica: "RuleEngine", l: int) -> T:
            memory = replica.cfg.engine(l).memory
            borrowed = l != i and (memory.is_empty() or memory.top().scope.kind is not ScopeKind.GLOBAL)
            if borrowed:
                memory.push(layer.copy())
            try:
                return op(replica, l)
            finally:
                if borrowed:
                    memory.pop()

        return self.run_joint(action, primary=i)

    def run_joint(self, action: Callable[["RuleEngine", int], T], primary: int = 1) -> T:
        """
        Ejecuta action una vez por engine sobre réplicas de G y de los mempools.

        Todas las réplicas deben coincidir en G, mempools, secuencia y valor;
        ningún engine puede modificar sus stores σ. Se confirma la réplica del
        engine primario.

        Raises:
            GlobalDivergence: Si las réplicas difieren o un σ cambió
        """
        cfg = self.cfg
        order = [primary] + [l for l in cfg.engine_indices() if l != primary]
        replicas = []
        for position, l in enumerate(order):
            replica_cfg = Configuration(
                engines=cfg.engines,
                mempools=[pool.copy() for pool in cfg.mempools],
                programs=cfg.programs,
                global_store=cfg.global_store.copy(),
                params=cfg.params,
                next_sequence=cfg.next_sequence,
                next_tx_id=cfg.next_tx_id,
            )
            replica = RuleEngine(ExecutionContext(
                cfg=replica_cfg,
                registry=self.ctx.registry,
                tx_id=self.ctx.tx_id,
                budget=self.ctx.budget,
                joint=True,
                recorder=self.ctx.recorder if position == 0 else None,
                steps=self.ctx.steps,
            ))
            engine = cfg.engine(l)
            before = ([store.copy() for store in engine.address_stores], engine.engine_store.copy())
            value = action(replica, l)
            if engine.address_stores != before[0] or engine.engine_store != before[1]:
                raise GlobalDivergence(f"engine {l}", "un paso global modificó stores locales")
            replicas.append((l, replica, value))

        _, chosen, value = replicas[0]
        for l, other, other_value in replicas[1:]:
            if (other.cfg.global_store != chosen.cfg.global_store
                    or other.cfg.mempools != chosen.cfg.mempools
                    or other.cfg.next_sequence != chosen.cfg.next_sequence
                    or other_value != value):
                raise GlobalDivergence(f"engine {l}", f"la réplica difiere de la del engine {primary}")

        cfg.global_store = chosen.cfg.global_store
        cfg.mempools = chosen.cfg.mempools
        cfg.next_sequence = chosen.cfg.next_sequence
        self.ctx.emitted.extend(chosen.ctx.emitted)
        self.ctx.steps = chosen.ctx.steps
        return value

__all__ = ["RuleEngine"]
