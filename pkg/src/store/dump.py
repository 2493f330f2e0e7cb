"""
Volcado legible de un ByteStore: `name : type @ offset = hex-bytes`.
"""

from __future__ import annotations

from config.constants import FilePaths
from src.store.bytestore import ByteStore

def store_rows(store: ByteStore) -> list:
    return [
        {"name": name, "type": type_name.value, "offset": offset, "raw": store.raw(name)}
        for name, type_name, offset, _ in store.entries()
    ]

def render_store(store: ByteStore, title: str = "") -> str:
    """Renderiza el store con el template de volcado"""
    from src.templates.template_manager import template_manager

    return template_manager.render_template(
        FilePaths.STORE_DUMP_TEMPLATE,
        {"title": title, "rows": store_rows(store)},
    )
