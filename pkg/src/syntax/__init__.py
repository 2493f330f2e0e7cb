"""
Sintaxis de Crystality: AST, lexer, parser e impresión.
"""

from .types import ScopeTag, TypeName, TypedValue
from .nodes import ContractDecl, FuncDecl, StateVarDecl
from .parser import parse_contract
from .printer import pretty_print
from .serializer import to_json

__all__ = [
    'ScopeTag', 'TypeName', 'TypedValue',
    'ContractDecl', 'FuncDecl', 'StateVarDecl',
    'parse_contract', 'pretty_print', 'to_json',
]
