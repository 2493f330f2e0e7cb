"""
Check de accesos a variables de estado según el scope de la función.
"""

from __future__ import annotations

from typing import List, Set

from src.checker.diagnostics import Diagnostic
from src.checker.matrix import can_read, can_write
from src.checker.registry_builder import effective_functions
from src.checker.walker import STATE, BodyWalker, Env
from src.state.registry import FunctionRegistry
from src.syntax.nodes import Assign, ContractDecl, Stmt, stmt_exps

class AccessWalker(BodyWalker):
    """Marca cada lectura o escritura de estado que la matriz prohíbe"""

    def visit_stmt(self, stmt: Stmt, env: Env, maybe: Set[str], in_loop: bool) -> None:
        scope = self.func.scope
        for ident in self.idents(stmt_exps(stmt)):
            if self.resolve(ident.name, env, maybe) != STATE:
                continue
            var_scope = self.state[ident.name].scope
            if not can_read(scope, var_scope):
                self.diagnostics.append(Diagnostic.error(
                    "scope-read",
                    f"función {scope.label} {self.func.name} no puede leer "
                    f"{var_scope.label} {ident.name}",
                    ident.span or stmt.span,
                ))

        if isinstance(stmt, Assign) and self.resolve(stmt.name, env, maybe) == STATE:
            var_scope = self.state[stmt.name].scope
            if not can_write(scope, var_scope):
                self.diagnostics.append(Diagnostic.error(
                    "scope-write",
                    f"función {scope.label} {self.func.name} no puede escribir "
                    f"{var_scope.label} {stmt.name}",
                    stmt.span,
                ))

def check_access(contract: ContractDecl, registry: FunctionRegistry) -> List[Diagnostic]:
    """
    Verifica la matriz de accesos para todas las funciones.

    Args:
        contract: Contrato parseado
        registry: Registro Λ ya construido

    Returns:
        Un Error por cada lectura o escritura prohibida
    """
    diagnostics: List[Diagnostic] = []
    for func in effective_functions(contract):
        diagnostics.extend(AccessWalker(contract, registry, func).run())
    return diagnostics
