"""
Checker estático: registro Λ, matriz de accesos, relays, llamadas y tipos.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List

from src.checker.access import check_access
from src.checker.calls import check_calls
from src.checker.diagnostics import (
    Diagnostic, Severity, has_errors, render_diagnostics, sort_diagnostics,
)
from src.checker.registry_builder import (
    MINT_FUNCTION, build_registry, effective_functions, registry_from,
)
from src.checker.relays import check_relays
from src.checker.typecheck import check_types
from src.state.registry import FunctionRegistry
from src.syntax.nodes import ContractDecl
from utils.helpers import setup_logging

logger = setup_logging(__name__)

@dataclass
class CheckResult:
    registry: FunctionRegistry
    diagnostics: List[Diagnostic] = field(default_factory=list)

    @property
    def errors(self) -> List[Diagnostic]:
        return [d for d in self.diagnostics if d.is_error]

    @property
    def ok(self) -> bool:
        return not has_errors(self.diagnostics)

def check_contract(contract: ContractDecl) -> CheckResult:
    """
    Ejecuta todos los checks sobre un contrato.

    Las funciones duplicadas se reportan como diagnóstico; el registro se
    arma con la primera definición de cada nombre.

    Returns:
        CheckResult con el registro y los diagnósticos ordenados por posición
    """
    diagnostics: List[Diagnostic] = []
    seen = set()
    for func in contract.functions:
        if func.name in seen:
            diagnostics.append(Diagnostic.error(
                "duplicate-function", f"función duplicada: {func.name}", func.span))
        seen.add(func.name)

    registry = registry_from(effective_functions(contract))
    diagnostics.extend(check_access(contract, registry))
    diagnostics.extend(check_relays(contract, registry))
    diagnostics.extend(check_calls(contract, registry))
    diagnostics.extend(check_types(contract, registry))

    result = CheckResult(registry, sort_diagnostics(set(diagnostics)))
    if result.ok:
        logger.debug(f"[OK] {contract.name}: sin errores ({len(result.diagnostics)} avisos)")
    else:
        logger.debug(f"[!] {contract.name}: {len(result.errors)} errores")
    return result

__all__ = [
    'CheckResult', 'Diagnostic', 'Severity', 'MINT_FUNCTION',
    'build_registry', 'check_access', 'check_relays', 'check_calls', 'check_types',
    'check_contract', 'has_errors', 'render_diagnostics', 'sort_diagnostics',
]
