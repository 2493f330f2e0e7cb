"""
Comandos check, run y dump-ast.

Cada comando imprime su resultado en stdout (texto o JSON) y devuelve el
código de salida: 0 correcto, 1 errores del checker o aserciones fallidas,
2 entrada ilegible o inválida. Los mensajes de log van a stderr.
"""

from __future__ import annotations

import json
import sys
from typing import IO, Optional

from config.constants import FilePaths
from config.paths import PathManager
from src.chain.scenario import load_scenario, run_scenario
from src.checker import check_contract, render_diagnostics
from src.cli.config import EXIT_FAILED, EXIT_INVALID, EXIT_OK, CliConfig
from src.errors import CrystalityError, DeploymentError, ParseError
from src.semantics.trace import TraceRecorder
from src.state.model import Configuration, SystemParams
from src.state.snapshot import render_configuration
from src.store.dump import render_store
from src.syntax.nodes import ContractDecl
from src.syntax.parser import parse_contract
from src.syntax.printer import pretty_print
from src.syntax.serializer import to_json
from src.templates.template_manager import template_manager
from utils.helpers import setup_logging

logger = setup_logging(__name__)

def _emit(text: str, out: Optional[IO[str]] = None) -> None:
    out = out or sys.stdout
    out.write(text if text.endswith("\n") else text + "\n")

def _emit_json(document, out: Optional[IO[str]] = None) -> None:
    _emit(json.dumps(document, indent=2, ensure_ascii=False, sort_keys=True), out)

def _fail(cfg: CliConfig, error: Exception, code: int, out: Optional[IO[str]] = None) -> int:
    """Reporta un error de entrada y devuelve su código de salida"""
    logger.error(f"[!] {error}")
    if cfg.json_output:
        detail = error.to_dict() if isinstance(error, CrystalityError) else {"message": str(error)}
        _emit_json({"error": detail}, out)
    return code

def _read_source(cfg: CliConfig) -> str:
    path = PathManager.validate_contract_path(cfg.contract_path)
    if path is None:
        raise FileNotFoundError(f"contrato no encontrado: {cfg.contract_path}")
    logger.debug(f"[>] Leyendo {path}")
    return PathManager.read_text(path)

def _load_contract(cfg: CliConfig) -> ContractDecl:
    """
    Lee y parsea el contrato.

    Raises:
        FileNotFoundError: Si el archivo no existe
        ParseError: Si el fuente no respeta la gramática
    """
    return parse_contract(_read_source(cfg))

def cmd_check(cfg: CliConfig, out: Optional[IO[str]] = None) -> int:
    """Parsea y verifica un contrato; exit 0 sin errores, 1 con errores, 2 si no se puede leer"""
    try:
        contract = _load_contract(cfg)
    except (OSError, ParseError) as exc:
        return _fail(cfg, exc, EXIT_INVALID, out)

    result = check_contract(contract)
    if cfg.json_output:
        _emit_json({
            "contract": contract.name,
            "ok": result.ok,
            "diagnostics": [d.to_json() for d in result.diagnostics],
        }, out)
    elif result.diagnostics:
        _emit(render_diagnostics(result.diagnostics, "text"), out)

    if result.ok:
        logger.info(f"[OK] {contract.name}: sin errores")
        return EXIT_OK
    logger.warning(f"[!] {contract.name}: {len(result.errors)} errores")
    return EXIT_FAILED

def cmd_dump_ast(cfg: CliConfig, out: Optional[IO[str]] = None) -> int:
    """Imprime el AST (json) o el contrato normalizado (text)"""
    try:
        contract = _load_contract(cfg)
    except (OSError, ParseError) as exc:
        return _fail(cfg, exc, EXIT_INVALID, out)

    if cfg.json_output:
        _emit_json(to_json(contract), out)
    else:
        _emit(pretty_print(contract), out)
    return EXIT_OK

def _final_dump(cfg: CliConfig, final: Configuration) -> Optional[str]:
    """Volcado pedido con --dump de la configuración final"""
    if cfg.dump == "configuration":
        return render_configuration(final)
    if cfg.dump == "global":
        return render_store(final.global_store, "global")
    return None

def cmd_run(cfg: CliConfig, out: Optional[IO[str]] = None) -> int:
    """
    Despliega el contrato, ejecuta el escenario y escribe la traza.

    La traza (líneas JSON) va al archivo --trace si se indicó; sin él y con
    formato json se imprime en stdout. El resumen va a stdout.
    """
    try:
        source = _read_source(cfg)
        contract = parse_contract(source)
        scenario = load_scenario(cfg.scenario_path)
    except (OSError, CrystalityError) as exc:
        return _fail(cfg, exc, EXIT_INVALID, out)

    result = check_contract(contract)
    if not result.ok:
        if not cfg.json_output:
            _emit(render_diagnostics(result.diagnostics, "text"), out)
        return _fail(cfg, DeploymentError(f"{contract.name}: {len(result.errors)} errores del checker"),
                     EXIT_INVALID, out)

    recorder = TraceRecorder(cfg.trace_level)
    try:
        params = SystemParams(cfg.engines, cfg.addresses, cfg.seed)
        trace = run_scenario(
            source, scenario, params,
            scenario_path=cfg.scenario_path, recorder=recorder, policy=cfg.policy,
        )
    except CrystalityError as exc:
        return _fail(cfg, exc, EXIT_INVALID, out)

    if cfg.trace_path is not None:
        path = PathManager.get_trace_path(cfg.trace_path)
        with open(path, "w", encoding="utf-8") as stream:
            recorder.write(stream)
        logger.info(f"[OK] Traza escrita en {path}")

    if cfg.json_output:
        document = trace.to_json()
        if cfg.trace_path is None:
            document["trace"] = recorder.records
        dump = _final_dump(cfg, trace.final)
        if dump is not None:
            document["dump"] = dump
        _emit_json(document, out)
    else:
        _emit(template_manager.render_template(FilePaths.RUN_SUMMARY_TEMPLATE, {
            "contract": contract.name,
            "params": trace.final.params,
            "verdicts": trace.verdicts,
            "assertions": trace.assertions,
            "failures": trace.failures,
            "passed": trace.passed,
        }), out)
        dump = _final_dump(cfg, trace.final)
        if dump is not None:
            _emit(dump, out)

    return EXIT_OK if trace.passed else EXIT_FAILED

COMMAND_HANDLERS = {
    "check": cmd_check,
    "run": cmd_run,
    "dump-ast": cmd_dump_ast,
}

def dispatch(cfg: CliConfig, out: Optional[IO[str]] = None) -> int:
    return COMMAND_HANDLERS[cfg.command](cfg, out)
