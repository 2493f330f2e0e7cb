"""
Recorrido del cuerpo de una función con resolución de nombres sensible al flujo.

Un identificador se resuelve primero contra los temporales declarados con
certeza en ese punto (parámetros incluidos) y luego contra las variables de
estado, igual que la búsqueda en tiempo de ejecución.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Set, Tuple

from src.checker.diagnostics import Diagnostic
from src.state.registry import FunctionRegistry
from src.syntax.nodes import (
    ContractDecl, Exp, FuncDecl, Ident, If, StateVarDecl, Stmt, TempDecl, While,
    flatten, iter_exps,
)
from src.syntax.types import TypeName

Env = Dict[str, TypeName]

TEMP = "temp"
STATE = "state"
MAYBE = "maybe"
UNDEFINED = "undefined"

class BodyWalker:
    """
    Base de los checks por función.

    Las subclases redefinen los hooks visit_stmt y visit_decl; el recorrido
    mantiene `env` (temporales seguros y su tipo) y `maybe` (temporales que
    podrían existir según la rama tomada).
    """

    def __init__(self, contract: ContractDecl, registry: FunctionRegistry, func: FuncDecl):
        self.contract = contract
        self.registry = registry
        self.func = func
        self.state: Dict[str, StateVarDecl] = {}
        for decl in contract.state_vars:
            self.state.setdefault(decl.name, decl)
        self.diagnostics: List[Diagnostic] = []

    def run(self) -> List[Diagnostic]:
        env: Env = {}
        for param in self.func.params:
            env.setdefault(param.name, param.type_name)
        self.walk(self.func.body, env, set(env), in_loop=False)
        return self.diagnostics

    def walk(self, stmt: Stmt, env: Env, maybe: Set[str], in_loop: bool) -> Tuple[Env, Set[str]]:
        for item in flatten(stmt):
            self.visit_stmt(item, env, maybe, in_loop)
            if isinstance(item, TempDecl):
                self.visit_decl(item, env, maybe, in_loop)
                env = dict(env)
                env[item.name] = item.type_name
                maybe = maybe | {item.name}
            elif isinstance(item, If):
                env_then, maybe_then = self.walk(item.then, dict(env), set(maybe), in_loop)
                env_else, maybe_else = self.walk(item.orelse, dict(env), set(maybe), in_loop)
                env = {
                    name: type_name
                    for name, type_name in env_then.items()
                    if env_else.get(name) is type_name
                }
                maybe = maybe_then | maybe_else
            elif isinstance(item, While):
                _, maybe_body = self.walk(item.body, dict(env), set(maybe), True)
                maybe = maybe | maybe_body
        return env, maybe

    # -- hooks ----------------------------------------------------------

    def visit_stmt(self, stmt: Stmt, env: Env, maybe: Set[str], in_loop: bool) -> None:
        """Se invoca para cada sentencia no-Seq antes de procesarla"""

    def visit_decl(self, decl: TempDecl, env: Env, maybe: Set[str], in_loop: bool) -> None:
        """Se invoca para cada declaración de temporal"""

    # -- utilidades -----------------------------------------------------

    def resolve(self, name: str, env: Env, maybe: Set[str]) -> str:
        if name in env:
            return TEMP
        if name in self.state:
            return STATE
        if name in maybe:
            return MAYBE
        return UNDEFINED

    def type_of_name(self, name: str, env: Env) -> Optional[TypeName]:
        if name in env:
            return env[name]
        if name in self.state:
            return self.state[name].type_name
        return None

    @staticmethod
    def idents(exps: List[Exp]) -> List[Ident]:
        return [sub for exp in exps for sub in iter_exps(exp) if isinstance(sub, Ident)]
