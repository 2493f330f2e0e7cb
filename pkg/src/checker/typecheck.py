"""
Tipado monomórfico de expresiones y buena formación de declaraciones.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Set

from src.checker.diagnostics import Diagnostic
from src.checker.registry_builder import effective_functions
from src.checker.walker import MAYBE, UNDEFINED, BodyWalker, Env
from src.state.registry import FunctionRegistry
from src.syntax.nodes import (
    ARITHMETIC_OPERATORS, Assign, AtExp, BuiltinOp, Call, CallExp, ContractDecl,
    Exp, Ident, If, Literal, Relay, Return, Stmt, TempDecl, While, contains_call,
)
from src.syntax.types import TypeName

ORDERING = ("<", "<=", ">", ">=")

def _name(type_name: Optional[TypeName]) -> str:
    return type_name.value if type_name else "?"

class TypeWalker(BodyWalker):
    """Infiere tipos y reporta usos indefinidos, sombras y redeclaraciones"""

    def visit_decl(self, decl: TempDecl, env: Env, maybe: Set[str], in_loop: bool) -> None:
        if decl.name in self.state:
            self.diagnostics.append(Diagnostic.error(
                "shadow", f"el temporal {decl.name} oculta una variable de estado", decl.span))
        elif decl.name in maybe:
            self.diagnostics.append(Diagnostic.error(
                "redeclared", f"{decl.name} ya está declarado en esta capa", decl.span))
        if in_loop:
            self.diagnostics.append(Diagnostic.warning(
                "decl-in-loop",
                f"declarar {decl.name} dentro de un while falla en la segunda iteración",
                decl.span,
            ))

    def visit_stmt(self, stmt: Stmt, env: Env, maybe: Set[str], in_loop: bool) -> None:
        if isinstance(stmt, Assign):
            actual = self.infer(stmt.exp, env, maybe)
            resolution = self.resolve(stmt.name, env, maybe)
            if resolution in (UNDEFINED, MAYBE):
                self._undefined(stmt.name, resolution, stmt.span)
                return
            expected = self.type_of_name(stmt.name, env)
            self._expect(expected, actual, f"asignación a {stmt.name}", stmt.span)

        elif isinstance(stmt, (If, While)):
            actual = self.infer(stmt.cond, env, maybe)
            if actual is not None and actual is not TypeName.BOOL:
                self.diagnostics.append(Diagnostic.error(
                    "cond-type", f"la condición debe ser bool, es {actual.value}", stmt.cond.span or stmt.span))

        elif isinstance(stmt, Return):
            actual = self.infer(stmt.exp, env, maybe)
            if self.func.return_type is not None:
                self._expect(self.func.return_type, actual, "return", stmt.span)

        elif isinstance(stmt, Call):
            self._check_args(stmt.func, stmt.args, env, maybe, stmt.span)

        elif isinstance(stmt, Relay):
            if isinstance(stmt.target, AtExp):
                target = stmt.target.exp
                if contains_call(target):
                    self.diagnostics.append(Diagnostic.error(
                        "relay-call-arg", "el destino de un relay no puede contener llamadas", stmt.span))
                actual = self.infer(target, env, maybe)
                self._expect(TypeName.ADDRESS, actual, "destino del relay", stmt.span)
            for arg in stmt.args:
                if contains_call(arg):
                    self.diagnostics.append(Diagnostic.error(
                        "relay-call-arg", "los argumentos de un relay no pueden contener llamadas",
                        arg.span or stmt.span))
            self._check_args(stmt.func, stmt.args, env, maybe, stmt.span)

    # -- inferencia -----------------------------------------------------

    def infer(self, exp: Exp, env: Env, maybe: Set[str]) -> Optional[TypeName]:
        if isinstance(exp, Literal):
            return exp.value.type_name

        if isinstance(exp, Ident):
            resolution = self.resolve(exp.name, env, maybe)
            if resolution in (UNDEFINED, MAYBE):
                self._undefined(exp.name, resolution, exp.span)
                return None
            return self.type_of_name(exp.name, env)

        if isinstance(exp, CallExp):
            self._check_args(exp.func, exp.args, env, maybe, exp.span)
            if exp.func in self.registry:
                return self.registry.rttype(exp.func)
            return None

        if isinstance(exp, BuiltinOp):
            left = self.infer(exp.left, env, maybe)
            right = self.infer(exp.right, env, maybe)
            if exp.op in ARITHMETIC_OPERATORS or exp.op in ORDERING:
                for side in (left, right):
                    if side is not None and side is not TypeName.UINT256:
                        self.diagnostics.append(Diagnostic.error(
                            "type", f"el operador {exp.op} requiere uint256, recibe {side.value}", exp.span))
                        break
                return TypeName.UINT256 if exp.op in ARITHMETIC_OPERATORS else TypeName.BOOL
            if left is not None and right is not None and left is not right:
                self.diagnostics.append(Diagnostic.error(
                    "type", f"{exp.op} compara {left.value} con {right.value}", exp.span))
            return TypeName.BOOL

        return None

    def _check_args(self, func: str, args: Sequence[Exp], env: Env, maybe: Set[str], span) -> None:
        actual = [self.infer(arg, env, maybe) for arg in args]
        if func not in self.registry:
            return
        expected = self.registry.paratype(func)
        if len(expected) != len(actual):
            return
        for position, (want, got) in enumerate(zip(expected, actual), start=1):
            self._expect(want, got, f"argumento {position} de {func}", span)

    def _expect(self, expected: Optional[TypeName], actual: Optional[TypeName], what: str, span) -> None:
        if expected is None or actual is None or expected is actual:
            return
        self.diagnostics.append(Diagnostic.error(
            "type", f"{what}: se esperaba {_name(expected)}, es {_name(actual)}", span))

    def _undefined(self, name: str, resolution: str, span) -> None:
        if resolution == MAYBE:
            self.diagnostics.append(Diagnostic.error(
                "maybe-undefined", f"{name} solo está declarado en algunas ramas", span))
        else:
            self.diagnostics.append(Diagnostic.error(
                "undefined", f"identificador no declarado: {name}", span))

def check_declarations(contract: ContractDecl) -> List[Diagnostic]:
    """Variables de estado y parámetros duplicados; parámetros que ocultan estado"""
    diagnostics: List[Diagnostic] = []
    seen = set()
    for decl in contract.state_vars:
        if decl.name in seen:
            diagnostics.append(Diagnostic.error(
                "duplicate-var", f"variable de estado duplicada: {decl.name}", decl.span))
        seen.add(decl.name)

    for func in contract.functions:
        params = set()
        for param in func.params:
            if param.name in params:
                diagnostics.append(Diagnostic.error(
                    "duplicate-param", f"parámetro duplicado en {func.name}: {param.name}", param.span))
            if param.name in seen:
                diagnostics.append(Diagnostic.error(
                    "shadow", f"el parámetro {param.name} oculta una variable de estado", param.span))
            params.add(param.name)
    return diagnostics

def check_types(contract: ContractDecl, registry: FunctionRegistry) -> List[Diagnostic]:
    """
    Tipado de asignaciones, condiciones, operadores, returns, llamadas y relays.

    Returns:
        Lista de diagnósticos de tipos y de buena formación
    """
    diagnostics = check_declarations(contract)
    for func in effective_functions(contract):
        diagnostics.extend(TypeWalker(contract, registry, func).run())
    return diagnostics
