"""
Árbol de sintaxis abstracta de los contratos Crystality.

Los nodos son dataclasses inmutables. La posición (span) no participa de la
igualdad: dos árboles son iguales si tienen la misma estructura.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from src.syntax.types import ScopeTag, TypeName, TypedValue

Span = Optional[Tuple[int, int]]

BINARY_OPERATORS = ("+", "-", "*", "/", "<=", "<", "==", ">=", ">", "!=")
COMPARISON_OPERATORS = ("<=", "<", "==", ">=", ">", "!=")
ARITHMETIC_OPERATORS = ("+", "-", "*", "/")

def _span():
    return field(default=None, compare=False, repr=False)

# ---------------------------------------------------------------------------
# Expresiones
# ---------------------------------------------------------------------------

class Exp:
    """Base de las expresiones"""
    span: Span

@dataclass(frozen=True)
class Ident(Exp):
    name: str
    span: Span = _span()

@dataclass(frozen=True)
class CallExp(Exp):
    func: str
    args: Tuple[Exp, ...]
    span: Span = _span()

@dataclass(frozen=True)
class Literal(Exp):
    value: TypedValue
    span: Span = _span()

@dataclass(frozen=True)
class BuiltinOp(Exp):
    op: str
    left: Exp
    right: Exp
    span: Span = _span()

    def __post_init__(self) -> None:
        if self.op not in BINARY_OPERATORS:
            raise ValueError(f"operador desconocido: {self.op}")

# ---------------------------------------------------------------------------
# Destinos de relay
# ---------------------------------------------------------------------------

class RelayTargetExpr:
    span: Span

@dataclass(frozen=True)
class AtExp(RelayTargetExpr):
    exp: Exp
    span: Span = _span()

@dataclass(frozen=True)
class AtEngines(RelayTargetExpr):
    span: Span = _span()

@dataclass(frozen=True)
class AtGlobal(RelayTargetExpr):
    span: Span = _span()

# ---------------------------------------------------------------------------
# Sentencias
# ---------------------------------------------------------------------------

class Stmt:
    """Base de las sentencias"""
    span: Span

class PStmt(Stmt):
    """Sentencia primitiva"""

@dataclass(frozen=True)
class TempDecl(PStmt):
    type_name: TypeName
    name: str
    span: Span = _span()

@dataclass(frozen=True)
class Skip(PStmt):
    span: Span = _span()

@dataclass(frozen=True)
class Assign(PStmt):
    name: str
    exp: Exp
    span: Span = _span()

@dataclass(frozen=True)
class Relay(PStmt):
    target: RelayTargetExpr
    func: str
    args: Tuple[Exp, ...]
    span: Span = _span()

@dataclass(frozen=True)
class Return(PStmt):
    exp: Exp
    span: Span = _span()

@dataclass(frozen=True)
class Call(PStmt):
    func: str
    args: Tuple[Exp, ...]
    span: Span = _span()

@dataclass(frozen=True)
class Seq(Stmt):
    first: Stmt
    second: Stmt
    span: Span = _span()

@dataclass(frozen=True)
class If(Stmt):
    cond: Exp
    then: Stmt
    orelse: Stmt
    span: Span = _span()

@dataclass(frozen=True)
class While(Stmt):
    cond: Exp
    body: Stmt
    span: Span = _span()

# ---------------------------------------------------------------------------
# Declaraciones
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StateVarDecl:
    type_name: TypeName
    scope: ScopeTag
    name: str
    span: Span = _span()

@dataclass(frozen=True)
class Param:
    type_name: TypeName
    name: str
    span: Span = _span()

@dataclass(frozen=True)
class FuncDecl:
    name: str
    params: Tuple[Param, ...]
    scope: ScopeTag
    return_type: Optional[TypeName]
    body: Stmt
    span: Span = _span()

@dataclass(frozen=True)
class ContractDecl:
    name: str
    state_vars: Tuple[StateVarDecl, ...] = ()
    functions: Tuple[FuncDecl, ...] = ()
    span: Span = _span()

    def function(self, name: str) -> Optional[FuncDecl]:
        for func in self.functions:
            if func.name == name:
                return func
        return None

# ---------------------------------------------------------------------------
# Utilidades de recorrido
# ---------------------------------------------------------------------------

def seq(stmts: Sequence[Stmt]) -> Stmt:
    """Encadena una lista no vacía de sentencias en un Seq anidado a derecha"""
    if not stmts:
        raise ValueError("un bloque necesita al menos una sentencia")
    result = stmts[-1]
    for stmt in reversed(stmts[:-1]):
        result = Seq(stmt, result, span=stmt.span)
    return result

def flatten(stmt: Stmt) -> List[Stmt]:
    """Lista plana de las sentencias de un bloque (inversa de seq)"""
    out: List[Stmt] = []
    stack = [stmt]
    while stack:
        current = stack.pop()
        if isinstance(current, Seq):
            stack.append(current.second)
            stack.append(current.first)
        else:
            out.append(current)
    return out

def iter_stmts(stmt: Stmt) -> Iterator[Stmt]:
    """Recorre todas las sentencias no-Seq, incluidas las anidadas"""
    for item in flatten(stmt):
        yield item
        if isinstance(item, If):
            yield from iter_stmts(item.then)
            yield from iter_stmts(item.orelse)
        elif isinstance(item, While):
            yield from iter_stmts(item.body)

def iter_exps(exp: Exp) -> Iterator[Exp]:
    """Recorre una expresión y sus subexpresiones en preorden"""
    yield exp
    if isinstance(exp, BuiltinOp):
        yield from iter_exps(exp.left)
        yield from iter_exps(exp.right)
    elif isinstance(exp, CallExp):
        for arg in exp.args:
            yield from iter_exps(arg)

def stmt_exps(stmt: Stmt) -> List[Exp]:
    """Expresiones directas de una sentencia (sin bajar a bloques)"""
    if isinstance(stmt, (Assign, Return)):
        return [stmt.exp]
    if isinstance(stmt, Call):
        return list(stmt.args)
    if isinstance(stmt, Relay):
        exps = list(stmt.args)
        if isinstance(stmt.target, AtExp):
            exps.insert(0, stmt.target.exp)
        return exps
    if isinstance(stmt, (If, While)):
        return [stmt.cond]
    return []

def contains_call(exp: Exp) -> bool:
    return any(isinstance(sub, CallExp) for sub in iter_exps(exp))
