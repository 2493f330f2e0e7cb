"""
Impresión canónica de contratos.

La salida vuelve a parsearse en un árbol estructuralmente igual.
"""

from __future__ import annotations

from typing import List

from src.syntax.nodes import (
    AtEngines, AtExp, AtGlobal, Assign, BuiltinOp, Call, CallExp, ContractDecl,
    Exp, FuncDecl, Ident, If, Literal, Relay, RelayTargetExpr, Return, Seq,
    Skip, StateVarDecl, Stmt, TempDecl, While, flatten,
)

INDENT = "    "

_PRECEDENCE = {
    "<=": 1, "<": 1, "==": 1, ">=": 1, ">": 1, "!=": 1,
    "+": 2, "-": 2,
    "*": 3, "/": 3,
}
_ATOM = 4

def _level(exp: Exp) -> int:
    return _PRECEDENCE[exp.op] if isinstance(exp, BuiltinOp) else _ATOM

def format_exp(exp: Exp) -> str:
    """Expresión con los paréntesis mínimos para conservar la estructura"""
    if isinstance(exp, Ident):
        return exp.name
    if isinstance(exp, Literal):
        return str(exp.value)
    if isinstance(exp, CallExp):
        return f"{exp.func}({format_args(exp.args)})"
    if isinstance(exp, BuiltinOp):
        level = _PRECEDENCE[exp.op]
        left = format_exp(exp.left)
        right = format_exp(exp.right)
        if _level(exp.left) < level:
            left = f"({left})"
        if _level(exp.right) <= level:
            right = f"({right})"
        return f"{left} {exp.op} {right}"
    raise TypeError(f"expresión desconocida: {exp!r}")

def format_args(args) -> str:
    return ", ".join(format_exp(arg) for arg in args)

def format_target(target: RelayTargetExpr) -> str:
    if isinstance(target, AtEngines):
        return "@engines"
    if isinstance(target, AtGlobal):
        return "@global"
    if isinstance(target, AtExp):
        return f"@ {format_exp(target.exp)}"
    raise TypeError(f"destino desconocido: {target!r}")

def _block(stmt: Stmt, depth: int, out: List[str]) -> None:
    for item in flatten(stmt):
        _stmt(item, depth, out)

def _stmt(stmt: Stmt, depth: int, out: List[str]) -> None:
    pad = INDENT * depth
    if isinstance(stmt, Skip):
        out.append(f"{pad}skip;")
    elif isinstance(stmt, TempDecl):
        out.append(f"{pad}{stmt.type_name.value} {stmt.name};")
    elif isinstance(stmt, Assign):
        out.append(f"{pad}{stmt.name} := {format_exp(stmt.exp)};")
    elif isinstance(stmt, Return):
        out.append(f"{pad}return {format_exp(stmt.exp)};")
    elif isinstance(stmt, Call):
        out.append(f"{pad}{stmt.func}({format_args(stmt.args)});")
    elif isinstance(stmt, Relay):
        out.append(f"{pad}relay {format_target(stmt.target)} {stmt.func}({format_args(stmt.args)});")
    elif isinstance(stmt, If):
        out.append(f"{pad}if ({format_exp(stmt.cond)}) then {{")
        _block(stmt.then, depth + 1, out)
        out.append(f"{pad}}} else {{")
        _block(stmt.orelse, depth + 1, out)
        out.append(f"{pad}}}")
    elif isinstance(stmt, While):
        out.append(f"{pad}while ({format_exp(stmt.cond)}) {{")
        _block(stmt.body, depth + 1, out)
        out.append(f"{pad}}}")
    elif isinstance(stmt, Seq):
        _block(stmt, depth, out)
    else:
        raise TypeError(f"sentencia desconocida: {stmt!r}")

def format_state_var(decl: StateVarDecl) -> str:
    return f"{decl.type_name.value} {decl.scope.label} {decl.name};"

def format_function(func: FuncDecl, depth: int = 1) -> List[str]:
    pad = INDENT * depth
    params = ", ".join(f"{p.type_name.value} {p.name}" for p in func.params)
    returns = f"returns {func.return_type.value}" if func.return_type else "returns"
    out = [f"{pad}function {func.name}({params}) {func.scope.label} {returns} {{"]
    _block(func.body, depth + 1, out)
    out.append(f"{pad}}}")
    return out

def pretty_print(contract: ContractDecl) -> str:
    """
    Imprime un contrato con indentación de cuatro espacios.

    Args:
        contract: Árbol bien formado

    Returns:
        Texto fuente terminado en salto de línea
    """
    lines = [f"contract {contract.name} {{"]
    for decl in contract.state_vars:
        lines.append(INDENT + format_state_var(decl))
    for func in contract.functions:
        lines.extend(format_function(func))
    lines.append("}")
    return "\n".join(lines) + "\n"

def format_stmt(stmt: Stmt) -> str:
    """Una sentencia como texto de una sola línea (para trazas)"""
    out: List[str] = []
    _stmt(stmt, 0, out)
    return " ".join(line.strip() for line in out)
