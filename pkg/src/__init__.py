"""
Código fuente de Crystality: parser, checker e intérprete de contratos.
"""

from . import syntax
from . import store
from . import state
from . import checker
from . import semantics
from . import chain
from . import templates

__all__ = ['syntax', 'store', 'state', 'checker', 'semantics', 'chain', 'templates']
