"""
Operadores binarios predefinidos con aritmética uint256 verificada.
"""

from __future__ import annotations

from src.errors import ArithmeticOverflow, DivisionByZero, TypeMismatch
from src.syntax.types import UINT256_MAX, TypeName, TypedValue

_ORDERING = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}

def apply_builtin(op: str, left: TypedValue, right: TypedValue, subject: str = "") -> TypedValue:
    """
    Aplica un operador binario.

    Raises:
        TypeMismatch: Operandos de tipo inválido
        ArithmeticOverflow: Resultado fuera de [0, 2^256)
        DivisionByZero: División por cero
    """
    subject = subject or op

    if op in ("==", "!="):
        if left.type_name is not right.type_name:
            raise TypeMismatch(subject, f"{left.type_name.value} {op} {right.type_name.value}")
        equal = left.payload == right.payload
        return TypedValue.boolean(equal if op == "==" else not equal)

    if left.type_name is not TypeName.UINT256 or right.type_name is not TypeName.UINT256:
        raise TypeMismatch(subject, f"{op} requiere uint256")

    a, b = left.payload, right.payload
    if op in _ORDERING:
        return TypedValue.boolean(_ORDERING[op](a, b))

    if op == "+":
        result = a + b
    elif op == "-":
        result = a - b
    elif op == "*":
        result = a * b
    elif op == "/":
        if b == 0:
            raise DivisionByZero(subject)
        result = a // b
    else:
        raise TypeMismatch(subject, f"operador desconocido {op}")

    if result < 0 or result > UINT256_MAX:
        raise ArithmeticOverflow(subject, f"{a} {op} {b}")
    return TypedValue.uint(result)
