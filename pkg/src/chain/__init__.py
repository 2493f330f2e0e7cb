"""
Simulador: despliegue, transacciones, planificación de relays y escenarios.
"""

from src.chain.executor import deploy, execute_transaction
from src.chain.results import APPLIED, REVERTED, ExecutionTrace, TransactionResult, Verdict
from src.chain.scenario import (
    ScenarioRunner, coerce_value, load_scenario, resolve_params, run_scenario,
)
from src.chain.scheduler import SchedulingPolicy, drain_relays, execute_batch

__all__ = [
    'deploy', 'execute_transaction', 'APPLIED', 'REVERTED', 'ExecutionTrace',
    'TransactionResult', 'Verdict', 'ScenarioRunner', 'coerce_value', 'load_scenario',
    'resolve_params', 'run_scenario', 'SchedulingPolicy', 'drain_relays', 'execute_batch',
]
