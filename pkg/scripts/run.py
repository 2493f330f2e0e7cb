#!/usr/bin/env python3
"""
Script principal de Crystality.

Uso:
    python scripts/run.py check contracts/my_token.crys
    python scripts/run.py run contracts/my_token.crys scenarios/flagship.json --trace traces/flagship.jsonl
    python scripts/run.py dump-ast contracts/my_token.crys --format json
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

# Agregar el directorio del proyecto al path para imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config.constants import Config
from src.cli import DUMPS, CliConfig, EXIT_INVALID, dispatch
from src.semantics.trace import LEVELS
from utils.helpers import get_project_info, set_verbose, setup_logging, validate_environment

logger = setup_logging(__name__)

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystality",
        description="Parser, checker e intérprete de contratos Crystality",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
        Ejemplos de uso:
        python scripts/run.py check contracts/my_token.crys
        python scripts/run.py run contracts/my_token.crys scenarios/flagship.json
        python scripts/run.py run contracts/global_counter.crys scenarios/global_counter.json --seed 7
        python scripts/run.py dump-ast contracts/my_token.crys --format json
        """
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("contract", help="Archivo .crys del contrato")
    common.add_argument("--format", choices=["text", "json"], default="text",
                        help="Formato de salida (default: text)")
    common.add_argument("--verbose", "-v", action="store_true",
                        help="Ejecutar en modo verbose (DEBUG)")

    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser("check", parents=[common], help="Verifica un contrato")
    subparsers.add_parser("dump-ast", parents=[common], help="Imprime el AST")

    run = subparsers.add_parser("run", parents=[common], help="Ejecuta un escenario")
    run.add_argument("scenario", help="Escenario JSON")
    run.add_argument("--engines", type=int, default=Config.ENGINES,
                     help=f"Cantidad de engines n (default: {Config.ENGINES})")
    run.add_argument("--addresses", type=int, default=Config.ADDRESSES,
                     help=f"Direcciones por engine k (default: {Config.ADDRESSES})")
    run.add_argument("--seed", type=int, default=Config.SEED,
                     help=f"Semilla del planificador (default: {Config.SEED})")
    run.add_argument("--policy", choices=["serial", "interleaved"], default=Config.DEFAULT_POLICY,
                     help="Política de los pasos drain sin política explícita")
    run.add_argument("--trace", help="Archivo de traza (líneas JSON)")
    run.add_argument("--trace-level", choices=list(LEVELS), default=Config.TRACE_LEVEL,
                     help=f"Nivel de traza (default: {Config.TRACE_LEVEL})")
    run.add_argument("--dump", choices=list(DUMPS),
                     help="Agrega el volcado final de la configuración o del store global")
    return parser

def main(argv: Optional[List[str]] = None) -> int:
    """Función principal del programa"""
    parser = build_parser()
    args = parser.parse_args(argv)
    set_verbose(args.verbose)

    project_info = get_project_info()
    logger.debug(f"[>] {project_info['name']} v{project_info['version']}")
    if not validate_environment():
        logger.error("[!] Problemas de configuración encontrados. Revisar configuración.")
        return EXIT_INVALID

    try:
        cfg = CliConfig(
            command=args.command,
            contract_path=args.contract,
            scenario_path=getattr(args, "scenario", None),
            engines=getattr(args, "engines", Config.ENGINES),
            addresses=getattr(args, "addresses", Config.ADDRESSES),
            seed=getattr(args, "seed", Config.SEED),
            trace_path=getattr(args, "trace", None),
            format=args.format,
            trace_level=getattr(args, "trace_level", Config.TRACE_LEVEL),
            policy=getattr(args, "policy", Config.DEFAULT_POLICY),
            dump=getattr(args, "dump", None),
        )
        return dispatch(cfg)

    except KeyboardInterrupt:
        logger.warning("[!] Proceso interrumpido por el usuario")
        return EXIT_INVALID

    except Exception as e:
        logger.error(f"[!] Error crítico: {e}")
        logger.debug("Detalles del error:", exc_info=True)
        return EXIT_INVALID

if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
