"""
Configuración de una invocación de línea de comandos.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from config.constants import Config

COMMANDS = ("check", "run", "dump-ast")
FORMATS = ("text", "json")
DUMPS = ("configuration", "global")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

@dataclass
class CliConfig:
    command: str
    contract_path: Path
    scenario_path: Optional[Path] = None
    engines: int = Config.ENGINES
    addresses: int = Config.ADDRESSES
    seed: int = Config.SEED
    trace_path: Optional[Path] = None
    format: str = "text"
    trace_level: str = Config.TRACE_LEVEL
    policy: str = Config.DEFAULT_POLICY
    dump: Optional[str] = None

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"comando desconocido: {self.command}")
        if self.format not in FORMATS:
            raise ValueError(f"formato desconocido: {self.format}")
        if self.dump is not None and self.dump not in DUMPS:
            raise ValueError(f"volcado desconocido: {self.dump}")
        if self.command == "run" and self.scenario_path is None:
            raise ValueError("run requiere un escenario")
        self.contract_path = Path(self.contract_path)
        if self.scenario_path is not None:
            self.scenario_path = Path(self.scenario_path)
        if self.trace_path is not None:
            self.trace_path = Path(self.trace_path)

    @property
    def json_output(self) -> bool:
        return self.format == "json"
