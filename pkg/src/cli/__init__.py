"""
Línea de comandos: check, run y dump-ast.
"""

from src.cli.commands import cmd_check, cmd_dump_ast, cmd_run, dispatch
from src.cli.config import COMMANDS, DUMPS, EXIT_FAILED, EXIT_INVALID, EXIT_OK, CliConfig

__all__ = [
    'cmd_check', 'cmd_dump_ast', 'cmd_run', 'dispatch',
    'COMMANDS', 'DUMPS', 'EXIT_FAILED', 'EXIT_INVALID', 'EXIT_OK', 'CliConfig',
]
