"""
Funciones utilitarias generales para el proyecto.
Logging, validaciones y funciones auxiliares.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import List, Optional

def setup_logging(name: Optional[str] = None) -> logging.Logger:
    """
    Configura el sistema de logging para el proyecto.

    El handler de consola escribe en stderr: stdout queda reservado para
    la salida JSON y las trazas.

    Args:
        name: Nombre del logger (opcional)

    Returns:
        Logger configurado
    """
    from config.constants import Config

    # Configurar el logger raíz solo una vez
    root_logger = logging.getLogger()

    if not root_logger.handlers:
        root_logger.setLevel(getattr(logging, Config.LOG_LEVEL.upper(), logging.INFO))

        formatter = logging.Formatter(Config.LOG_FORMAT)

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)

        # Forzar encoding UTF-8 en Windows
        if hasattr(console_handler.stream, 'reconfigure'):
            console_handler.stream.reconfigure(encoding=Config.ENCODING)

        root_logger.addHandler(console_handler)

    logger = logging.getLogger(name)
    logger.propagate = True

    return logger

def set_verbose(verbose: bool) -> None:
    """Sube el logger raíz a DEBUG cuando se pide modo detallado"""
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)

def validate_environment() -> bool:
    """
    Valida que el entorno esté correctamente configurado.

    Returns:
        True si el entorno es válido, False en caso contrario
    """
    from config.constants import Config, FilePaths

    issues: List[str] = []

    if sys.version_info < (3, 8):
        issues.append("Python 3.8+ requerido")

    if Config.ENGINES < 1 or Config.ADDRESSES < 1:
        issues.append(
            f"Topología inválida: engines={Config.ENGINES}, addresses={Config.ADDRESSES}"
        )

    if Config.TRACE_LEVEL not in ("off", "tx", "step"):
        issues.append(f"CRYSTALITY_TRACE_LEVEL desconocido: {Config.TRACE_LEVEL}")

    for template in (
        FilePaths.DIAGNOSTICS_TEMPLATE,
        FilePaths.STORE_DUMP_TEMPLATE,
        FilePaths.CONFIGURATION_TEMPLATE,
        FilePaths.RUN_SUMMARY_TEMPLATE,
    ):
        if not (Path(FilePaths.TEMPLATES_DIR) / template).exists():
            issues.append(f"Template requerido no encontrado: {template}")

    if issues:
        logger = setup_logging(__name__)
        logger.error("[!] Problemas de configuración encontrados:")
        for issue in issues:
            logger.error(f"    - {issue}")
        return False

    return True

def get_project_info() -> dict:
    """
    Obtiene información del proyecto.

    Returns:
        Diccionario con información del proyecto
    """
    project_root = Path(__file__).parent.parent

    return {
        "name": "Crystality",
        "version": "1.0.0",
        "description": "Parser, checker y simulador multi-engine del lenguaje Crystality",
        "root_directory": str(project_root),
        "python_version": f"{sys.version_info.major}.{sys.version_info.minor}.{sys.version_info.micro}"
    }
