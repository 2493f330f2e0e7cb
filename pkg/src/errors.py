"""
Jerarquía de excepciones del proyecto.

Todas derivan de CrystalityError. Las fallas de ejecución (ExecutionError)
nunca escapan de las operaciones públicas de semántica: se devuelven como
estado Fault de un StepOutcome y la cadena las convierte en veredicto Reverted.
"""

from __future__ import annotations

from typing import Iterable, Optional, Tuple

Span = Optional[Tuple[int, int]]

class CrystalityError(Exception):
    """Error base del proyecto"""

    code = "error"

    def to_dict(self) -> dict:
        return {"code": self.code, "message": str(self)}

class ParseError(CrystalityError):
    """Error de sintaxis con posición y conjunto de tokens esperados"""

    code = "parse"

    def __init__(self, line: int, column: int, expected: Iterable[str], found: str = ""):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        self.found = found
        esperado = ", ".join(self.expected) if self.expected else "?"
        super().__init__(
            f"{line}:{column} se esperaba {{{esperado}}}, se encontró {found!r}"
        )

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "line": self.line,
            "column": self.column,
            "expected": list(self.expected),
            "found": self.found,
            "message": str(self),
        }

# ---------------------------------------------------------------------------
# Fallas de ejecución
# ---------------------------------------------------------------------------

class ExecutionError(CrystalityError):
    """
    Falla de ejecución: ninguna regla aplica a la configuración actual.

    Args:
        subject: Identificador o expresión culpable
        detail: Descripción adicional (opcional)
        span: Posición (línea, columna) en el fuente (opcional)
    """

    code = "ExecutionError"

    def __init__(self, subject: str, detail: str = "", span: Span = None):
        self.subject = subject
        self.detail = detail
        self.span = span
        texto = f"{self.code}: {subject}"
        if detail:
            texto += f" ({detail})"
        super().__init__(texto)

    def with_span(self, span: Span) -> "ExecutionError":
        """Completa la posición si todavía no fue fijada"""
        if self.span is None:
            self.span = span
        return self

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "subject": self.subject,
            "detail": self.detail,
            "span": list(self.span) if self.span else None,
        }

class UndefinedVariable(ExecutionError):
    code = "UndefinedVariable"

class AlreadyDefined(ExecutionError):
    code = "AlreadyDefined"

class TypeMismatch(ExecutionError):
    code = "TypeMismatch"

class ArityMismatch(TypeMismatch):
    code = "ArityMismatch"

class ScopeViolation(ExecutionError):
    code = "ScopeViolation"

class DivisionByZero(ExecutionError):
    code = "DivisionByZero"

class ArithmeticOverflow(ExecutionError):
    code = "ArithmeticOverflow"

class InvalidAddress(ExecutionError):
    code = "InvalidAddress"

class Nontermination(ExecutionError):
    code = "Nontermination"

class UndefinedFunction(ExecutionError):
    code = "UndefinedFunction"

class GlobalDivergence(ExecutionError):
    """Las réplicas de un paso global conjunto no coinciden"""
    code = "GlobalDivergence"

class MemoryNotEmpty(ExecutionError):
    """Pila de memoria no vacía en la frontera de una transacción"""
    code = "MemoryNotEmpty"

# ---------------------------------------------------------------------------
# Errores de configuración y orquestación
# ---------------------------------------------------------------------------

class InvalidParams(CrystalityError):
    code = "InvalidParams"

class InvalidSender(CrystalityError):
    code = "InvalidSender"

class DuplicateFunction(CrystalityError):
    code = "DuplicateFunction"

    def __init__(self, name: str, span: Span = None):
        self.name = name
        self.span = span
        super().__init__(f"función duplicada: {name}")

class DeploymentError(CrystalityError):
    """El contrato no puede desplegarse (diagnósticos de error o declaración fallida)"""
    code = "DeploymentError"

class RoundBudgetExceeded(CrystalityError):
    code = "RoundBudgetExceeded"

    def __init__(self, rounds: int, pending: int):
        self.rounds = rounds
        self.pending = pending
        super().__init__(
            f"presupuesto de rondas agotado tras {rounds} rondas, {pending} relays pendientes"
        )

class ScenarioError(CrystalityError):
    code = "ScenarioError"
