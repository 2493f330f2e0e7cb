"""
Gestión de templates Jinja2.
Configuración y renderizado de los volcados y reportes de texto.
"""

from __future__ import annotations

from jinja2 import Environment, FileSystemLoader
from typing import Dict, Any, Union

from config.constants import FilePaths
from utils.helpers import setup_logging

logger = setup_logging(__name__)

class TemplateManager:
    """Gestor de templates Jinja2"""

    def __init__(self):
        """Inicializa el gestor de templates"""
        self.env = self._setup_environment()
        self._register_filters()

    def _setup_environment(self) -> Environment:
        """
        Configura el entorno Jinja2.

        Returns:
            Environment configurado
        """
        env = Environment(
            loader=FileSystemLoader(str(FilePaths.TEMPLATES_DIR)),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

        logger.debug("[OK] Environment Jinja2 configurado")
        return env

    def _register_filters(self) -> None:
        """Registra filtros personalizados en el environment"""
        self.env.filters['hex'] = self._hex
        self.env.filters['scope_label'] = self._scope_label

    def render_template(self, template_name: str, context: Dict[str, Any]) -> str:
        """
        Renderiza un template con el contexto dado.

        Args:
            template_name: Nombre del template
            context: Variables para el template

        Returns:
            Texto renderizado

        Raises:
            TemplateNotFound: Si el template no existe
            TemplateError: Si hay error en el renderizado
        """
        try:
            template = self.env.get_template(template_name)
            text = template.render(**context)
            logger.debug(f"[OK] Template renderizado: {template_name}")
            return text

        except Exception as e:
            logger.error(f"[!] Error renderizando template {template_name}: {e}")
            raise

    @staticmethod
    def _hex(data: Union[bytes, bytearray]) -> str:
        """Filtro: bytes como hexadecimal en minúsculas"""
        return bytes(data).hex()

    @staticmethod
    def _scope_label(scope: Any) -> str:
        """
        Filtro: etiqueta legible de un ScopeBinding, ScopeTag o destino de relay.
        """
        label = getattr(scope, "label", None)
        if label is not None:
            return label() if callable(label) else label
        return str(scope)

# Instancia global del template manager
template_manager = TemplateManager()
