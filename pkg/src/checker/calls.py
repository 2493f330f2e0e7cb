"""
Check de llamadas: funciones conocidas, aridad, scopes legales y retorno.
"""

from __future__ import annotations

from typing import Iterator, List, Set, Tuple, Union

from src.checker.diagnostics import Diagnostic
from src.checker.matrix import can_call
from src.checker.registry_builder import effective_functions
from src.state.registry import FunctionRegistry
from src.syntax.nodes import (
    Call, CallExp, ContractDecl, FuncDecl, Relay, Return, TempDecl, iter_exps,
    iter_stmts, stmt_exps,
)

CallSite = Union[Call, CallExp]

def _call_sites(func: FuncDecl) -> Iterator[Tuple[CallSite, bool]]:
    """(sitio, es_sentencia) para cada llamada síncrona del cuerpo"""
    for stmt in iter_stmts(func.body):
        if isinstance(stmt, Call):
            yield stmt, True
        for exp in stmt_exps(stmt):
            for sub in iter_exps(exp):
                if isinstance(sub, CallExp):
                    yield sub, False

def _temp_names(func: FuncDecl) -> Set[str]:
    return {stmt.name for stmt in iter_stmts(func.body) if isinstance(stmt, TempDecl)}

def check_calls(contract: ContractDecl, registry: FunctionRegistry) -> List[Diagnostic]:
    """
    Verifica llamadas síncronas, relays y sentencias return.

    Returns:
        Errores por función desconocida, aridad, scope ilegal, llamada-sentencia
        a función con retorno, llamada-expresión a función sin retorno y return
        en función sin tipo de retorno; Warning cuando el llamado declara un
        temporal que ya existe en la capa heredada del llamador
    """
    diagnostics: List[Diagnostic] = []
    functions = {func.name: func for func in effective_functions(contract)}

    for func in functions.values():
        caller_names = _temp_names(func) | {p.name for p in func.params}

        for site, is_stmt in _call_sites(func):
            if site.func not in registry:
                diagnostics.append(Diagnostic.error(
                    "unknown-function", f"función no declarada: {site.func}", site.span))
                continue
            info = registry.get(site.func)
            if len(site.args) != info.arity:
                diagnostics.append(Diagnostic.error(
                    "arity",
                    f"{site.func} espera {info.arity} argumentos, recibe {len(site.args)}",
                    site.span,
                ))
            if not can_call(func.scope, info.scope):
                diagnostics.append(Diagnostic.error(
                    "call-scope",
                    f"una función {func.scope.label} no puede llamar a {info.scope.label} {site.func}",
                    site.span,
                ))
            if is_stmt and info.rttype is not None:
                diagnostics.append(Diagnostic.error(
                    "value-call",
                    f"{site.func} devuelve {info.rttype.value}; debe usarse como expresión",
                    site.span,
                ))
            if not is_stmt and info.rttype is None:
                diagnostics.append(Diagnostic.error(
                    "void-call", f"{site.func} no devuelve valor", site.span))

            callee = functions.get(site.func)
            if callee is not None:
                clash = (_temp_names(callee) & caller_names) - {p.name for p in callee.params}
                for name in sorted(clash):
                    diagnostics.append(Diagnostic.warning(
                        "inherited-temp",
                        f"{site.func} declara {name}, que ya existe en la capa de {func.name}",
                        site.span,
                    ))

        for stmt in iter_stmts(func.body):
            if isinstance(stmt, Relay):
                if stmt.func not in registry:
                    diagnostics.append(Diagnostic.error(
                        "unknown-function", f"relay a función no declarada: {stmt.func}", stmt.span))
                elif len(stmt.args) != registry.get(stmt.func).arity:
                    diagnostics.append(Diagnostic.error(
                        "arity",
                        f"{stmt.func} espera {registry.get(stmt.func).arity} argumentos, "
                        f"recibe {len(stmt.args)}",
                        stmt.span,
                    ))
            elif isinstance(stmt, Return) and func.return_type is None:
                diagnostics.append(Diagnostic.error(
                    "return-void", f"return en la función sin retorno {func.name}", stmt.span))

    return diagnostics
