"""
Configuración del simulador Crystality.
"""

from .constants import Config, FilePaths, TEMPLATES_DIR, CONTRACTS_DIR, SCENARIOS_DIR

__all__ = ['Config', 'FilePaths', 'TEMPLATES_DIR', 'CONTRACTS_DIR', 'SCENARIOS_DIR']
