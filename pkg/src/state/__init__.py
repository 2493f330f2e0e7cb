"""
Modelo de estado: configuración, pilas de memoria, mempools, relays y registro Λ.
"""

from .model import (
    Configuration, EngineState, Mempool, MemoryLayer, MemoryStack, RelayTarget,
    RelayTransaction, ScopeBinding, ScopeKind, SystemParams, TargetKind,
    new_configuration, new_ID,
)
from .registry import FunctionInfo, FunctionRegistry
from .transactions import TransactionEnvelope, TransactionKind, get_sender_address
from .snapshot import render_configuration, snapshot

__all__ = [
    'Configuration', 'EngineState', 'Mempool', 'MemoryLayer', 'MemoryStack',
    'RelayTarget', 'RelayTransaction', 'ScopeBinding', 'ScopeKind',
    'SystemParams', 'TargetKind', 'new_configuration', 'new_ID',
    'FunctionInfo', 'FunctionRegistry',
    'TransactionEnvelope', 'TransactionKind', 'get_sender_address',
    'render_configuration', 'snapshot',
]
