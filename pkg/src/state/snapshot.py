"""
Instantáneas JSON y volcado de texto de una configuración.
"""

from __future__ import annotations

from config.constants import FilePaths
from src.state.model import Configuration

def snapshot(cfg: Configuration) -> dict:
    """
    Forma JSON de la configuración (trazas y pruebas golden).

    Returns:
        Diccionario con params, engines, mempools y global
    """
    return {
        "params": cfg.params.to_json(),
        "engines": [
            {
                "engine": index,
                "addresses": [store.to_json() for store in engine.address_stores],
                "engine_store": engine.engine_store.to_json(),
                "memory_depth": engine.memory.depth,
            }
            for index, engine in enumerate(cfg.engines, start=1)
        ],
        "mempools": [[relay.to_json() for relay in pool] for pool in cfg.mempools],
        "global": cfg.global_store.to_json(),
    }

def render_configuration(cfg: Configuration) -> str:
    """Volcado de texto de toda la configuración mediante el template"""
    from src.store.dump import store_rows
    from src.templates.template_manager import template_manager

    engines = []
    for index, engine in enumerate(cfg.engines, start=1):
        engines.append({
            "index": index,
            "addresses": [
                {"index": j, "rows": store_rows(store)}
                for j, store in enumerate(engine.address_stores, start=1)
            ],
            "engine_rows": store_rows(engine.engine_store),
            "memory_depth": engine.memory.depth,
            "mempool": list(cfg.mempool(index)),
        })

    return template_manager.render_template(
        FilePaths.CONFIGURATION_TEMPLATE,
        {
            "params": cfg.params,
            "engines": engines,
            "global_rows": store_rows(cfg.global_store),
        },
    )
