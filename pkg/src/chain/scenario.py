"""
Ejecución de escenarios JSON.

Formato:
    {"params": {"n": 2, "k": 2, "seed": 0},
     "steps": [
        {"deploy": "contratos/my_token.crys"},
        {"relay": {"target": [1, 1], "func": "mint", "args": [100]}},
        {"tx": {"sender": [1, 1], "func": "transfer", "args": [[2, 1], 30]}},
        {"drain": {"policy": "serial"}},
        {"expect": {"engine": 1, "address": 1, "var": "balance", "value": 70}},
        {"expect": {"pending": 0}},
        {"expect": {"engine": 1, "memory": "empty"}}
     ]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional, Sequence, Tuple, Union

from config.constants import Config
from config.paths import PathManager
from src.chain.executor import deploy, execute_transaction
from src.chain.results import ExecutionTrace
from src.chain.scheduler import drain_relays
from src.checker import check_contract
from src.errors import CrystalityError, ScenarioError
from src.semantics.trace import TraceRecorder
from src.state.model import (
    Configuration, RelayTarget, RelayTransaction, SystemParams, new_configuration,
)
from src.state.registry import FunctionRegistry
from src.state.transactions import TransactionEnvelope
from src.syntax.nodes import ContractDecl
from src.syntax.parser import parse_contract
from src.syntax.types import TypeName, TypedValue
from utils.helpers import setup_logging

logger = setup_logging(__name__)

STEP_KINDS = ("deploy", "tx", "relay", "drain", "expect")

def load_scenario(path: Union[str, Path]) -> dict:
    """
    Lee y valida la forma de un escenario.

    Raises:
        ScenarioError: Si el archivo no es JSON o le faltan campos
    """
    try:
        scenario = json.loads(PathManager.read_text(path))
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: JSON inválido ({exc.msg}, línea {exc.lineno})") from exc
    validate_scenario(scenario)
    return scenario

def validate_scenario(scenario: Any) -> None:
    if not isinstance(scenario, dict):
        raise ScenarioError("el escenario debe ser un objeto JSON")
    steps = scenario.get("steps", [])
    if not isinstance(steps, list):
        raise ScenarioError("'steps' debe ser una lista")
    for position, step in enumerate(steps, start=1):
        if not isinstance(step, dict) or len(step) != 1 or next(iter(step)) not in STEP_KINDS:
            raise ScenarioError(f"paso {position}: se esperaba uno de {', '.join(STEP_KINDS)}")
    params = scenario.get("params", {})
    if not isinstance(params, dict):
        raise ScenarioError("'params' debe ser un objeto")

def resolve_params(scenario: dict, fallback: Optional[SystemParams] = None) -> SystemParams:
    """params del escenario > parámetros recibidos > Config"""
    base = fallback or SystemParams(Config.ENGINES, Config.ADDRESSES, Config.SEED)
    given = scenario.get("params", {})
    return SystemParams(
        n=int(given.get("n", base.n)),
        k=int(given.get("k", base.k)),
        seed=int(given.get("seed", base.seed)),
    )

def coerce_value(raw: Any, type_name: Optional[TypeName] = None) -> TypedValue:
    """
    Convierte un valor JSON en TypedValue.

    Sin tipo esperado: bool -> bool, entero -> uint256, [r, j] -> address.

    Raises:
        ScenarioError: Si el valor no corresponde al tipo
    """
    try:
        if type_name is None:
            if isinstance(raw, bool):
                type_name = TypeName.BOOL
            elif isinstance(raw, int):
                type_name = TypeName.UINT256
            else:
                type_name = TypeName.ADDRESS
        if type_name is TypeName.BOOL and isinstance(raw, bool):
            return TypedValue.boolean(raw)
        if type_name is TypeName.UINT256 and isinstance(raw, int) and not isinstance(raw, bool):
            return TypedValue.uint(raw)
        if type_name is TypeName.ADDRESS and isinstance(raw, (list, tuple)) and len(raw) == 2:
            return TypedValue.address(int(raw[0]), int(raw[1]))
    except ValueError:
        pass
    raise ScenarioError(f"valor {raw!r} no es un {type_name.value}")

def coerce_args(func: str, raw_args: Sequence[Any], registry: FunctionRegistry) -> Tuple[TypedValue, ...]:
    types = registry.paratype(func) if func in registry else ()
    if len(types) != len(raw_args):
        types = (None,) * len(raw_args)
    return tuple(coerce_value(raw, t) for raw, t in zip(raw_args, types))

class ScenarioRunner:
    """
    Ejecuta los pasos de un escenario sobre un contrato.

    Los fallos de aserción y las reversiones inesperadas se registran en la
    traza; nunca abortan la ejecución.
    """

    def __init__(self, source: Optional[str], params: SystemParams,
                 recorder: TraceRecorder, scenario_path: Optional[Path] = None,
                 policy: Optional[str] = None):
        self.source = source
        self.params = params
        self.recorder = recorder
        self.scenario_path = scenario_path
        self.policy = policy or Config.DEFAULT_POLICY
        self.cfg: Configuration = new_configuration(params)
        self.registry = FunctionRegistry()
        self.contract: Optional[ContractDecl] = None
        self.trace = ExecutionTrace()

    # ------------------------------------------------------------------

    def run(self, steps: Sequence[dict]) -> ExecutionTrace:
        if self.source is not None and not any("deploy" in step for step in steps):
            self.deploy(None)
        for position, step in enumerate(steps, start=1):
            kind, body = next(iter(step.items()))
            logger.debug(f"[>] Paso {position}: {kind}")
            getattr(self, kind)(body)
        self.trace.final = self.cfg
        self.trace.records = list(self.recorder.records)
        return self.trace

    def deploy(self, body: Any) -> None:
        if self.contract is not None:
            raise ScenarioError("el escenario admite un único contrato")
        source = self.source
        if source is None:
            if not isinstance(body, str):
                raise ScenarioError("deploy requiere la ruta del contrato")
            path = PathManager.resolve_relative(body, self.scenario_path)
            if not path.is_file():
                raise ScenarioError(f"contrato no encontrado: {path}")
            source = PathManager.read_text(path)
        self.contract = parse_contract(source)
        self.registry = check_contract(self.contract).registry
        self.cfg = deploy(self.cfg, self.contract, self.registry, self.recorder)

    def tx(self, body: dict) -> None:
        try:
            sender = tuple(body["sender"])
            func = body["func"]
        except (KeyError, TypeError) as exc:
            raise ScenarioError(f"tx incompleta: {body!r}") from exc
        args = coerce_args(func, body.get("args", []), self.registry)
        envelope = TransactionEnvelope.user(sender, func, args)
        result = execute_transaction(self.cfg, envelope, self.registry, self.recorder)
        self.cfg = result.config
        self.trace.verdicts.append(result.verdict)

        expect_revert = body.get("expect_revert")
        if expect_revert is not None:
            self._assert("revert", {"tx": result.verdict.tx, "func": func},
                         bool(expect_revert), result.verdict.reverted)
        elif result.verdict.reverted:
            self.trace.failures.append(f"tx {result.verdict.tx} {func}: {result.verdict.error}")

    def relay(self, body: dict) -> None:
        func = body.get("func")
        if not func:
            raise ScenarioError(f"relay sin función: {body!r}")
        target = body.get("target")
        if target == "engines":
            relay_target, engines = RelayTarget.engine(), list(self.cfg.engine_indices())
        elif target == "global":
            relay_target, engines = RelayTarget.global_(), list(self.cfg.engine_indices())
        elif isinstance(target, list) and len(target) == 2 and self.params.valid_address(*target):
            relay_target, engines = RelayTarget.address(target[1]), [target[0]]
        else:
            raise ScenarioError(f"destino de relay inválido: {target!r}")

        relay = RelayTransaction(
            target=relay_target,
            func=func,
            args=coerce_args(func, body.get("args", []), self.registry),
            origin=tuple(body.get("origin", (0, 0))),
            sequence=self.cfg.take_sequence(),
        )
        for r in engines:
            self.cfg.mempool(r).add(relay)
        self.recorder.event("inject", engines=engines, **relay.to_json())

    def drain(self, body: Optional[dict]) -> None:
        body = body or {}
        policy = body.get("policy", self.policy)
        try:
            self.cfg, drained = drain_relays(self.cfg, self.registry, policy,
                                             body.get("seed"), self.recorder)
        except CrystalityError as exc:
            self.trace.failures.append(f"drain: {exc}")
            self.recorder.event("drain", policy=policy, error=exc.to_dict())
            return
        self.trace.verdicts.extend(drained.verdicts)

    def expect(self, body: dict) -> None:
        if "pending" in body:
            self._assert("pending", {}, body["pending"], self.cfg.pending())
            return
        if body.get("memory") == "empty":
            engine = self._engine_index(body)
            self._assert("memory", {"engine": engine}, 0, self.cfg.engine(engine).memory.depth)
            return

        var = body.get("var")
        where = body.get("address", "engine")
        engine = self._engine_index(body)
        subject = {"engine": engine, "address": where, "var": var}
        if where == "global":
            store = self.cfg.global_store
        elif where == "engine":
            store = self.cfg.engine(engine).engine_store
        else:
            store = self.cfg.engine(engine).address_store(self._address_index(where))
        actual = store.get(var).to_json() if var in store else None
        self._assert("value", subject, body.get("value"), actual)

    def _engine_index(self, body: dict) -> int:
        """Índice de engine de un expect, validado contra 1..n"""
        engine = body.get("engine", 1)
        if isinstance(engine, bool) or not isinstance(engine, int) or not 1 <= engine <= self.params.n:
            raise ScenarioError(f"engine fuera de rango en expect: {engine!r}")
        return engine

    def _address_index(self, where: Any) -> int:
        """Índice local de dirección de un expect, validado contra 1..k"""
        if isinstance(where, bool) or not isinstance(where, int) or not 1 <= where <= self.params.k:
            raise ScenarioError(f"dirección fuera de rango en expect: {where!r}")
        return where

    # ------------------------------------------------------------------

    def _assert(self, check: str, subject: dict, expected: Any, actual: Any) -> None:
        passed = expected == actual
        record = {"check": check, **subject, "expected": expected, "actual": actual, "passed": passed}
        self.trace.assertions.append(record)
        self.recorder.event("expect", **record)
        if passed:
            logger.debug(f"[OK] expect {check} {subject}")
        else:
            logger.warning(f"[!] expect {check} {subject}: esperado {expected!r}, obtenido {actual!r}")

def run_scenario(source: Optional[str], scenario: dict,
                 params: Optional[SystemParams] = None, *,
                 scenario_path: Optional[Union[str, Path]] = None,
                 recorder: Optional[TraceRecorder] = None,
                 policy: Optional[str] = None) -> ExecutionTrace:
    """
    Despliega el contrato y ejecuta los pasos del escenario en orden.

    Args:
        source: Código del contrato; si es None se usa la ruta del paso deploy
        scenario: Escenario ya cargado
        params: Parámetros por defecto (los del escenario tienen prioridad)
        scenario_path: Archivo del escenario para resolver rutas relativas
        recorder: Traza (por defecto nivel Config.TRACE_LEVEL)
        policy: Política por defecto de los pasos drain

    Returns:
        ExecutionTrace con veredictos, aserciones y configuración final

    Raises:
        ScenarioError: Escenario mal formado
        ParseError / DeploymentError: El contrato no se puede desplegar
    """
    validate_scenario(scenario)
    resolved = resolve_params(scenario, params)
    recorder = recorder if recorder is not None else TraceRecorder(Config.TRACE_LEVEL)
    runner = ScenarioRunner(
        source, resolved, recorder,
        Path(scenario_path) if scenario_path is not None else None,
        policy,
    )
    logger.info(f"[>] Ejecutando escenario ({len(scenario.get('steps', []))} pasos, n={resolved.n}, k={resolved.k})")
    trace = runner.run(scenario.get("steps", []))
    if trace.passed:
        logger.info(f"[OK] Escenario completado: {len(trace.assertions)} aserciones correctas")
    else:
        logger.warning(f"[!] Escenario con fallos: {len(trace.failed_assertions)} aserciones, "
                       f"{len(trace.failures)} errores")
    return trace
