"""
Check de relays: el scope de la función destino debe coincidir con el destino.
"""

from __future__ import annotations

from typing import List

from src.checker.diagnostics import Diagnostic
from src.checker.registry_builder import effective_functions
from src.state.registry import FunctionRegistry
from src.syntax.nodes import AtEngines, AtExp, AtGlobal, ContractDecl, Relay, iter_stmts
from src.syntax.types import ScopeTag

_EXPECTED = {
    AtExp: (ScopeTag.ADDRESS, "relay @exp"),
    AtEngines: (ScopeTag.ENGINE, "relay @engines"),
    AtGlobal: (ScopeTag.GLOBAL, "relay @global"),
}

def check_relays(contract: ContractDecl, registry: FunctionRegistry) -> List[Diagnostic]:
    """
    Verifica destino y scope de cada relay.

    Returns:
        Error si el scope de la función no coincide con el destino, o si
        se emite relay @global desde una función @global
    """
    diagnostics: List[Diagnostic] = []
    for func in effective_functions(contract):
        for stmt in iter_stmts(func.body):
            if not isinstance(stmt, Relay):
                continue

            expected, form = _EXPECTED[type(stmt.target)]
            if stmt.func in registry:
                actual = registry.scope(stmt.func)
                if actual is not expected:
                    diagnostics.append(Diagnostic.error(
                        "relay-target",
                        f"{form} requiere una función {expected.label}, "
                        f"{stmt.func} es {actual.label}",
                        stmt.span,
                    ))

            if isinstance(stmt.target, AtGlobal) and func.scope is ScopeTag.GLOBAL:
                diagnostics.append(Diagnostic.error(
                    "relay-global",
                    f"relay @global no puede emitirse desde la función @global {func.name}",
                    stmt.span,
                ))
    return diagnostics
