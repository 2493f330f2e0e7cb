"""
Diagnósticos del checker y su presentación (texto o JSON).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Tuple

from config.constants import FilePaths

class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"

@dataclass(frozen=True)
class Diagnostic:
    """Un hallazgo del checker. Todo Error bloquea el despliegue."""

    severity: Severity
    code: str
    message: str
    span: Tuple[int, int] = (0, 0)

    @classmethod
    def error(cls, code: str, message: str, span: Optional[Tuple[int, int]]) -> "Diagnostic":
        return cls(Severity.ERROR, code, message, span or (0, 0))

    @classmethod
    def warning(cls, code: str, message: str, span: Optional[Tuple[int, int]]) -> "Diagnostic":
        return cls(Severity.WARNING, code, message, span or (0, 0))

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def to_json(self) -> dict:
        return {
            "severity": self.severity.value,
            "code": self.code,
            "line": self.span[0],
            "column": self.span[1],
            "message": self.message,
        }

    def __str__(self) -> str:
        return f"{self.severity.value} {self.code} {self.span[0]}:{self.span[1]} {self.message}"

def sort_diagnostics(diagnostics: Iterable[Diagnostic]) -> List[Diagnostic]:
    return sorted(diagnostics, key=lambda d: (d.span, d.severity.value, d.code, d.message))

def has_errors(diagnostics: Iterable[Diagnostic]) -> bool:
    return any(d.is_error for d in diagnostics)

def render_diagnostics(diagnostics: List[Diagnostic], fmt: str = "text") -> str:
    """
    Presenta los diagnósticos.

    Args:
        diagnostics: Lista ya ordenada
        fmt: "text" (una línea por diagnóstico) o "json"

    Returns:
        Texto listo para imprimir
    """
    if fmt == "json":
        return json.dumps([d.to_json() for d in diagnostics], indent=2, ensure_ascii=False)

    from src.templates.template_manager import template_manager

    return template_manager.render_template(
        FilePaths.DIAGNOSTICS_TEMPLATE,
        {"diagnostics": diagnostics},
    )
