"""
Serialización del AST a estructuras JSON (dump-ast).
"""

from __future__ import annotations

import dataclasses
from enum import Enum
from typing import Any

from src.syntax.types import TypedValue

def to_json(node: Any) -> Any:
    """
    Convierte un nodo (o valor) a tipos JSON.

    Cada nodo produce {"node": <clase>, <campos>..., "span": [línea, columna]}.
    Las secuencias Seq se aplanan en listas para facilitar la lectura.
    """
    from src.syntax.nodes import Seq, flatten

    if isinstance(node, TypedValue):
        return {"type": node.type_name.value, "value": node.to_json()}
    if isinstance(node, Enum):
        return node.value
    if isinstance(node, Seq):
        return {"node": "Block", "stmts": [to_json(item) for item in flatten(node)]}
    if dataclasses.is_dataclass(node):
        data = {"node": type(node).__name__}
        for item in dataclasses.fields(node):
            value = getattr(node, item.name)
            if item.name == "span":
                data["span"] = list(value) if value else None
            else:
                data[item.name] = to_json(value)
        return data
    if isinstance(node, (list, tuple)):
        return [to_json(item) for item in node]
    return node
