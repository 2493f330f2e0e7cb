"""
Configuraciones centrales del proyecto.
Rutas dinámicas y parámetros del simulador tomados del entorno.
"""

import os
from pathlib import Path

# Configuración dinámica de rutas
BASE_DIR = Path(__file__).parent.parent.resolve()

# Directorios de recursos
TEMPLATES_DIR = BASE_DIR / "templates"
CONTRACTS_DIR = BASE_DIR / "contracts"
SCENARIOS_DIR = BASE_DIR / "scenarios"
TRACES_DIR = "traces"

# Extensión recomendada para contratos
CONTRACT_SUFFIX = ".crys"

# Configuración de clases de archivo
class FilePaths:
    """Paths específicos de archivos del proyecto"""
    # Directorios
    BASE_DIR = BASE_DIR
    TEMPLATES_DIR = TEMPLATES_DIR
    CONTRACTS_DIR = CONTRACTS_DIR
    SCENARIOS_DIR = SCENARIOS_DIR
    TRACES_DIR = TRACES_DIR

    # Contratos de ejemplo
    MY_TOKEN_PATH = CONTRACTS_DIR / "my_token.crys"
    GLOBAL_COUNTER_PATH = CONTRACTS_DIR / "global_counter.crys"

    # Templates de texto
    DIAGNOSTICS_TEMPLATE = "diagnostics.txt.j2"
    STORE_DUMP_TEMPLATE = "store_dump.txt.j2"
    CONFIGURATION_TEMPLATE = "configuration.txt.j2"
    RUN_SUMMARY_TEMPLATE = "run_summary.txt.j2"

# Configuración de aplicación
class Config:
    """Configuración centralizada de la aplicación"""

    # Variables de entorno - topología por defecto
    ENGINES = int(os.getenv("CRYSTALITY_ENGINES", "2"))
    ADDRESSES = int(os.getenv("CRYSTALITY_ADDRESSES", "2"))
    SEED = int(os.getenv("CRYSTALITY_SEED", "0"))

    # Límites de ejecución
    STEP_BUDGET = int(os.getenv("CRYSTALITY_STEP_BUDGET", "100000"))
    ROUND_BUDGET = int(os.getenv("CRYSTALITY_ROUND_BUDGET", "64"))
    MAX_SOURCE_LENGTH = int(os.getenv("CRYSTALITY_MAX_SOURCE", "1000000"))

    # Traza de ejecución: off, tx, step
    TRACE_LEVEL = os.getenv("CRYSTALITY_TRACE_LEVEL", "tx")

    # Política de planificación por defecto: serial, interleaved
    DEFAULT_POLICY = "serial"

    # Configuración de logging
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
    LOG_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"

    # Configuración de encoding
    ENCODING = "utf-8"
