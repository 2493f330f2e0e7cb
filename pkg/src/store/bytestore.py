"""
Almacenamiento direccionado por bytes con espacio de nombres y de tipos.

Un ByteStore es el sustrato de los stores de dirección, de engine, del store
global y de cada capa de memoria. Los bytes se guardan en un mapa disperso:
las posiciones no escritas leen 0 y los ceros nunca se almacenan, de modo
que la igualdad estructural entre stores es canónica.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Optional, Tuple

from src.errors import AlreadyDefined, TypeMismatch, UndefinedVariable
from src.syntax.types import TypeName, TypedValue

_SIZES = {
    TypeName.UINT256: 32,
    TypeName.BOOL: 1,
    TypeName.ADDRESS: 16,
}

def size(type_name: TypeName) -> int:
    """Cantidad de bytes que ocupa un valor del tipo"""
    return _SIZES[type_name]

def init(type_name: TypeName) -> TypedValue:
    """Valor inicial: 0, false o la dirección centinela (0, 0)"""
    if type_name is TypeName.UINT256:
        return TypedValue.uint(0)
    if type_name is TypeName.BOOL:
        return TypedValue.boolean(False)
    return TypedValue.address(0, 0)

def encode(value: TypedValue) -> bytes:
    """Codificación big-endian de ancho fijo"""
    if value.type_name is TypeName.UINT256:
        return value.payload.to_bytes(32, "big")
    if value.type_name is TypeName.BOOL:
        return b"\x01" if value.payload else b"\x00"
    engine, index = value.payload
    return engine.to_bytes(8, "big") + index.to_bytes(8, "big")

def decode(type_name: TypeName, data: bytes) -> TypedValue:
    if type_name is TypeName.UINT256:
        return TypedValue.uint(int.from_bytes(data, "big"))
    if type_name is TypeName.BOOL:
        return TypedValue.boolean(data != b"\x00")
    return TypedValue.address(int.from_bytes(data[:8], "big"), int.from_bytes(data[8:], "big"))

class ByteStore:
    """
    Mapa de direcciones a bytes con N (nombres) y T (tipos) asociados.

    Los métodos allocate/set mutan el store; las funciones de módulo
    allocate_new/write devuelven una copia nueva.
    """

    __slots__ = ("cells", "names", "types", "next_free")

    def __init__(self) -> None:
        self.cells: Dict[int, int] = {}
        self.names: Dict[str, int] = {}
        self.types: Dict[str, TypeName] = {}
        self.next_free = 0

    def copy(self) -> "ByteStore":
        clone = ByteStore()
        clone.cells = dict(self.cells)
        clone.names = dict(self.names)
        clone.types = dict(self.types)
        clone.next_free = self.next_free
        return clone

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ByteStore):
            return NotImplemented
        return (
            self.names == other.names
            and self.types == other.types
            and self.next_free == other.next_free
            and self.cells == other.cells
        )

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(f"{name}={value}" for name, _, _, value in self.entries())
        return f"ByteStore({body})"

    def __contains__(self, name: str) -> bool:
        return name in self.names

    def __len__(self) -> int:
        return len(self.names)

    def is_empty(self) -> bool:
        return not self.names

    def type_of(self, name: str) -> Optional[TypeName]:
        return self.types.get(name)

    # -- mutación en sitio ---------------------------------------------

    def allocate(self, type_name: TypeName, name: str) -> int:
        """Reserva la región de `name` al final del store y devuelve su offset"""
        if name in self.names:
            raise AlreadyDefined(name)
        offset = self.next_free
        self.names[name] = offset
        self.types[name] = type_name
        self.next_free = offset + size(type_name)
        return offset

    def get(self, name: str) -> TypedValue:
        if name not in self.names:
            raise UndefinedVariable(name)
        offset = self.names[name]
        type_name = self.types[name]
        data = bytes(self.cells.get(addr, 0) for addr in range(offset, offset + size(type_name)))
        return decode(type_name, data)

    def set(self, name: str, value: TypedValue) -> None:
        if name not in self.names:
            raise UndefinedVariable(name)
        expected = self.types[name]
        if value.type_name is not expected:
            raise TypeMismatch(name, f"se esperaba {expected.value}, llegó {value.type_name.value}")
        offset = self.names[name]
        for addr, byte in enumerate(encode(value), start=offset):
            if byte:
                self.cells[addr] = byte
            else:
                self.cells.pop(addr, None)

    def forget(self, names: Iterable[str]) -> None:
        """Quita nombres de N y T; sus bytes quedan huérfanos pero reservados"""
        for name in names:
            if name in self.names:
                offset = self.names.pop(name)
                type_name = self.types.pop(name)
                for addr in range(offset, offset + size(type_name)):
                    self.cells.pop(addr, None)

    # -- inspección -----------------------------------------------------

    def entries(self) -> Iterator[Tuple[str, TypeName, int, TypedValue]]:
        """(nombre, tipo, offset, valor) ordenados por offset"""
        for name, offset in sorted(self.names.items(), key=lambda item: item[1]):
            yield name, self.types[name], offset, self.get(name)

    def raw(self, name: str) -> bytes:
        return encode(self.get(name))

    def to_json(self) -> Dict[str, dict]:
        return {
            name: {"type": type_name.value, "offset": offset, "value": value.to_json()}
            for name, type_name, offset, value in self.entries()
        }

# ---------------------------------------------------------------------------
# Operaciones puras
# ---------------------------------------------------------------------------

def allocate_new(type_name: TypeName, store: ByteStore, name: str) -> ByteStore:
    """Copia de `store` con `name` reservado; los bytes no cambian"""
    result = store.copy()
    result.allocate(type_name, name)
    return result

def read(store: ByteStore, name: str) -> TypedValue:
    return store.get(name)

def write(store: ByteStore, name: str, value: TypedValue) -> ByteStore:
    """Copia de `store` donde solo cambia la región de `name`"""
    result = store.copy()
    result.set(name, value)
    return result
