"""
Gestión de rutas del proyecto.
Funciones para validar y resolver rutas de contratos, escenarios y trazas.
"""

from pathlib import Path
from typing import Optional, Union
from config.constants import Config, FilePaths, CONTRACT_SUFFIX

class PathManager:
    """Gestor de rutas del proyecto"""

    @staticmethod
    def ensure_dir(path: Path) -> Path:
        """Asegura que el directorio existe"""
        path.mkdir(parents=True, exist_ok=True)
        return path

    @staticmethod
    def validate_contract_path(path: Union[str, Path]) -> Optional[Path]:
        """Valida si existe el contrato, intenta agregando la extensión .crys"""
        candidate = Path(path)
        if candidate.is_file():
            return candidate
        if not candidate.suffix:
            with_suffix = candidate.with_suffix(CONTRACT_SUFFIX)
            return with_suffix if with_suffix.is_file() else None
        return None

    @staticmethod
    def resolve_relative(path: Union[str, Path], anchor: Optional[Path]) -> Path:
        """
        Resuelve una ruta relativa al archivo que la menciona.

        Args:
            path: Ruta tal como aparece en el escenario
            anchor: Archivo de escenario (opcional)

        Returns:
            Ruta absoluta o relativa al directorio del escenario
        """
        candidate = Path(path)
        if candidate.is_absolute() or anchor is None:
            return candidate
        return Path(anchor).parent / candidate

    @staticmethod
    def read_text(path: Union[str, Path]) -> str:
        """Lee un archivo de texto con el encoding del proyecto"""
        return Path(path).read_text(encoding=Config.ENCODING)

    @staticmethod
    def get_trace_path(path: Union[str, Path]) -> Path:
        """Obtiene la ruta de traza y crea su directorio padre"""
        trace_path = Path(path)
        PathManager.ensure_dir(trace_path.parent if str(trace_path.parent) else Path(FilePaths.TRACES_DIR))
        return trace_path

