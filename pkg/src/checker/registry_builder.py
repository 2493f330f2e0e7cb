"""
Construcción del registro Λ a partir del contrato.
"""

from __future__ import annotations

from typing import Iterable, Tuple

from src.errors import DuplicateFunction
from src.state.registry import FunctionInfo, FunctionRegistry
from src.syntax.nodes import Assign, BuiltinOp, ContractDecl, FuncDecl, Ident, Param
from src.syntax.types import ScopeTag, TypeName
from utils.helpers import setup_logging

logger = setup_logging(__name__)

MINT_NAME = "mint"
BALANCE_NAME = "balance"

# mint(uint256 amount) @address { balance := balance + amount; }
MINT_FUNCTION = FuncDecl(
    name=MINT_NAME,
    params=(Param(TypeName.UINT256, "amount"),),
    scope=ScopeTag.ADDRESS,
    return_type=None,
    body=Assign(BALANCE_NAME, BuiltinOp("+", Ident(BALANCE_NAME), Ident("amount"))),
)

def wants_mint(contract: ContractDecl) -> bool:
    """True si el contrato tiene un balance @address uint256 y no define mint"""
    has_balance = any(
        decl.name == BALANCE_NAME
        and decl.scope is ScopeTag.ADDRESS
        and decl.type_name is TypeName.UINT256
        for decl in contract.state_vars
    )
    return has_balance and contract.function(MINT_NAME) is None

def effective_functions(contract: ContractDecl) -> Tuple[FuncDecl, ...]:
    """Funciones declaradas más el mint predefinido cuando corresponde"""
    if wants_mint(contract):
        return contract.functions + (MINT_FUNCTION,)
    return contract.functions

def function_info(func: FuncDecl, injected: bool = False) -> FunctionInfo:
    return FunctionInfo(
        name=func.name,
        scope=func.scope,
        paraname=tuple(p.name for p in func.params),
        paratype=tuple(p.type_name for p in func.params),
        body=func.body,
        rttype=func.return_type,
        span=func.span,
        injected=injected,
    )

def registry_from(functions: Iterable[FuncDecl]) -> FunctionRegistry:
    """Registro sin validar duplicados; la primera definición gana"""
    registry = FunctionRegistry()
    for func in functions:
        if func.name not in registry:
            registry.add(function_info(func, injected=func is MINT_FUNCTION))
    return registry

def build_registry(contract: ContractDecl) -> FunctionRegistry:
    """
    Construye Λ para todas las funciones del contrato.

    Args:
        contract: Contrato parseado

    Returns:
        FunctionRegistry con scope, parámetros, cuerpo y tipo de retorno

    Raises:
        DuplicateFunction: Si dos funciones comparten nombre
    """
    seen = set()
    for func in contract.functions:
        if func.name in seen:
            raise DuplicateFunction(func.name, func.span)
        seen.add(func.name)

    functions = effective_functions(contract)
    registry = registry_from(functions)
    if len(functions) > len(contract.functions):
        logger.debug(f"[~] mint predefinido inyectado en {contract.name}")
    return registry
