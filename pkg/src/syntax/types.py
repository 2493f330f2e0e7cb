"""
Tipos de valor del lenguaje: nombres de tipo, etiquetas de scope y valores tipados.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

UINT256_MAX = 2 ** 256 - 1
U64_MAX = 2 ** 64 - 1

class TypeName(Enum):
    """Tipos concretos del lenguaje"""
    UINT256 = "uint256"
    BOOL = "bool"
    ADDRESS = "address"

    @classmethod
    def from_keyword(cls, keyword: str) -> "TypeName":
        return cls(keyword)

class ScopeTag(Enum):
    """Scope de una variable de estado o de una función"""
    ADDRESS = "address"
    ENGINE = "engine"
    GLOBAL = "global"

    @property
    def label(self) -> str:
        return f"@{self.value}"

Payload = Union[int, bool, Tuple[int, int]]

@dataclass(frozen=True)
class TypedValue:
    """
    Valor con su tipo.

    UInt256 lleva un entero en [0, 2^256), Bool un bool y AddressT el par
    (engine r, dirección j) de dos enteros de 64 bits. (0, 0) es la dirección
    centinela inválida.
    """

    type_name: TypeName
    payload: Payload

    def __post_init__(self) -> None:
        if self.type_name is TypeName.UINT256:
            ok = type(self.payload) is int and 0 <= self.payload <= UINT256_MAX
        elif self.type_name is TypeName.BOOL:
            ok = type(self.payload) is bool
        else:
            ok = (
                isinstance(self.payload, tuple)
                and len(self.payload) == 2
                and all(type(part) is int and 0 <= part <= U64_MAX for part in self.payload)
            )
        if not ok:
            raise ValueError(f"payload fuera de rango para {self.type_name.value}: {self.payload!r}")

    @classmethod
    def uint(cls, value: int) -> "TypedValue":
        return cls(TypeName.UINT256, value)

    @classmethod
    def boolean(cls, value: bool) -> "TypedValue":
        return cls(TypeName.BOOL, bool(value))

    @classmethod
    def address(cls, engine: int, index: int) -> "TypedValue":
        return cls(TypeName.ADDRESS, (engine, index))

    def to_json(self):
        """Forma JSON del payload: entero, bool o [r, j]"""
        if self.type_name is TypeName.ADDRESS:
            return list(self.payload)
        return self.payload

    def __str__(self) -> str:
        if self.type_name is TypeName.ADDRESS:
            return f"address({self.payload[0]}, {self.payload[1]})"
        if self.type_name is TypeName.BOOL:
            return "true" if self.payload else "false"
        return str(self.payload)
