"""
Matriz de permisos de acceso a variables de estado y de llamadas entre scopes.
"""

from __future__ import annotations

from typing import Dict, FrozenSet

from src.syntax.types import ScopeTag

A, E, G = ScopeTag.ADDRESS, ScopeTag.ENGINE, ScopeTag.GLOBAL

# scope de la función -> scopes de variable legibles
READABLE: Dict[ScopeTag, FrozenSet[ScopeTag]] = {
    A: frozenset({A, E, G}),
    E: frozenset({E, G}),
    G: frozenset({G}),
}

# scope de la función -> scopes de variable escribibles
WRITABLE: Dict[ScopeTag, FrozenSet[ScopeTag]] = {
    A: frozenset({A, E}),
    E: frozenset({E}),
    G: frozenset({G}),
}

# scope del llamador -> scopes de función invocables de forma síncrona
CALLABLE: Dict[ScopeTag, FrozenSet[ScopeTag]] = {
    A: frozenset({A, E}),
    E: frozenset({E}),
    G: frozenset({G}),
}

def can_read(func_scope: ScopeTag, var_scope: ScopeTag) -> bool:
    return var_scope in READABLE[func_scope]

def can_write(func_scope: ScopeTag, var_scope: ScopeTag) -> bool:
    return var_scope in WRITABLE[func_scope]

def can_call(caller: ScopeTag, callee: ScopeTag) -> bool:
    return callee in CALLABLE[caller]
