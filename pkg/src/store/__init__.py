"""
Almacenamiento por bytes: ByteStore, codificación y volcado.
"""

from src.syntax.types import TypedValue
from .bytestore import ByteStore, allocate_new, decode, encode, init, read, size, write
from .dump import render_store

__all__ = [
    'ByteStore', 'TypedValue',
    'size', 'init', 'allocate_new', 'read', 'write', 'encode', 'decode',
    'render_store',
]
