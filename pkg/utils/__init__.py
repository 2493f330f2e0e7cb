"""
Utilidades generales del proyecto.
"""

from .helpers import setup_logging, set_verbose, validate_environment, get_project_info

__all__ = [
    'setup_logging',
    'set_verbose',
    'validate_environment',
    'get_project_info'
]
