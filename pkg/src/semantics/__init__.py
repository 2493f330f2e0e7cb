"""
Semántica operacional: motor de reglas, operaciones de paso y traza.
"""

from src.semantics.builtins import apply_builtin
from src.semantics.context import ExecutionContext
from src.semantics.engine import RuleEngine
from src.semantics.operations import (
    assign, call, declare_state_var, declare_temp, evaluate, exec_stmt, relay, step,
)
from src.semantics.outcome import Delivery, Status, StepOutcome
from src.semantics.trace import LEVELS, TraceRecord, TraceRecorder

__all__ = [
    'apply_builtin', 'ExecutionContext', 'RuleEngine',
    'assign', 'call', 'declare_state_var', 'declare_temp', 'evaluate', 'exec_stmt',
    'relay', 'step', 'Delivery', 'Status', 'StepOutcome',
    'LEVELS', 'TraceRecord', 'TraceRecorder',
]
