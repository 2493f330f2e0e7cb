"""
Registro de funciones Λ: scope, parámetros, cuerpo y tipo de retorno.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple

from src.errors import UndefinedFunction
from src.syntax.nodes import Span, Stmt
from src.syntax.types import ScopeTag, TypeName

@dataclass(frozen=True)
class FunctionInfo:
    name: str
    scope: ScopeTag
    paraname: Tuple[str, ...]
    paratype: Tuple[TypeName, ...]
    body: Stmt
    rttype: Optional[TypeName] = None
    span: Span = None
    injected: bool = False

    def __post_init__(self) -> None:
        if len(self.paraname) != len(self.paratype):
            raise ValueError(f"{self.name}: paraname y paratype de distinto largo")

    @property
    def arity(self) -> int:
        return len(self.paraname)

class FunctionRegistry:
    """Mapas Λ_scope, Λ_paraname, Λ_paratype, Λ_body y Λ_rttype"""

    def __init__(self) -> None:
        self._functions: Dict[str, FunctionInfo] = {}

    def add(self, info: FunctionInfo) -> None:
        self._functions[info.name] = info

    def get(self, idf: str) -> FunctionInfo:
        if idf not in self._functions:
            raise UndefinedFunction(idf)
        return self._functions[idf]

    def __contains__(self, idf: str) -> bool:
        return idf in self._functions

    def __iter__(self) -> Iterator[FunctionInfo]:
        return iter(self._functions.values())

    def __len__(self) -> int:
        return len(self._functions)

    def names(self) -> Tuple[str, ...]:
        return tuple(self._functions)

    def scope(self, idf: str) -> ScopeTag:
        return self.get(idf).scope

    def paraname(self, idf: str) -> Tuple[str, ...]:
        return self.get(idf).paraname

    def paratype(self, idf: str) -> Tuple[TypeName, ...]:
        return self.get(idf).paratype

    def body(self, idf: str) -> Stmt:
        return self.get(idf).body

    def rttype(self, idf: str) -> Optional[TypeName]:
        return self.get(idf).rttype
