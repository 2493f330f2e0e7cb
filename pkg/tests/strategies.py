"""
Estrategias hypothesis para árboles de sintaxis y contratos verificables.
"""

from __future__ import annotations

from typing import Dict, List, NamedTuple, Optional, Tuple

from hypothesis import strategies as st

from src.syntax.nodes import (
    AtEngines, AtExp, AtGlobal, Assign, BuiltinOp, Call, CallExp, ContractDecl,
    FuncDecl, Ident, If, Literal, Param, Relay, Return, Skip, StateVarDecl, TempDecl,
    While, seq,
)
from src.syntax.types import UINT256_MAX, U64_MAX, ScopeTag, TypeName, TypedValue

A, E, G = ScopeTag.ADDRESS, ScopeTag.ENGINE, ScopeTag.GLOBAL

# ---------------------------------------------------------------------------
# Árboles arbitrarios (solo sintaxis)
# ---------------------------------------------------------------------------

NAMES = ("x", "y", "z", "balance", "amount", "payee", "foo", "bar_1", "t0", "_tmp")

names = st.sampled_from(NAMES)
type_names = st.sampled_from(list(TypeName))
scopes = st.sampled_from(list(ScopeTag))

literals = st.one_of(
    st.integers(0, UINT256_MAX).map(TypedValue.uint),
    st.booleans().map(TypedValue.boolean),
    st.tuples(st.integers(0, U64_MAX), st.integers(0, U64_MAX)).map(lambda p: TypedValue.address(*p)),
).map(Literal)

def _compound(children):
    return st.one_of(
        st.builds(BuiltinOp, st.sampled_from(["+", "-", "*", "/", "<=", "<", "==", ">=", ">", "!="]),
                  children, children),
        st.builds(CallExp, names, st.lists(children, max_size=2).map(tuple)),
    )

expressions = st.recursive(st.one_of(literals, names.map(Ident)), _compound, max_leaves=8)

arg_lists = st.lists(expressions, max_size=2).map(tuple)

relay_targets = st.one_of(
    expressions.map(AtExp),
    st.just(AtEngines()),
    st.just(AtGlobal()),
)

primitive_statements = st.one_of(
    st.builds(TempDecl, type_names, names),
    st.just(Skip()),
    st.builds(Assign, names, expressions),
    st.builds(Relay, relay_targets, names, arg_lists),
    st.builds(Return, expressions),
    st.builds(Call, names, arg_lists),
)

def _blocks(children):
    block = st.lists(children, min_size=1, max_size=3).map(seq)
    return st.one_of(
        st.builds(If, expressions, block, block),
        st.builds(While, expressions, block),
    )

statements = st.recursive(primitive_statements, _blocks, max_leaves=6)
blocks = st.lists(statements, min_size=1, max_size=4).map(seq)

params = st.lists(st.builds(Param, type_names, names), max_size=3).map(tuple)

functions = st.builds(
    FuncDecl,
    name=names,
    params=params,
    scope=scopes,
    return_type=st.one_of(st.none(), type_names),
    body=blocks,
)

contracts = st.builds(
    ContractDecl,
    name=st.sampled_from(["MyToken", "E", "Counter", "C1"]),
    state_vars=st.lists(st.builds(StateVarDecl, type_names, scopes, names), max_size=3).map(tuple),
    functions=st.lists(functions, max_size=3).map(tuple),
)

# ---------------------------------------------------------------------------
# Contratos verificables para el evaluador de referencia
# ---------------------------------------------------------------------------

ORACLE_STATE = (
    StateVarDecl(TypeName.UINT256, A, "a0"),
    StateVarDecl(TypeName.UINT256, A, "a1"),
    StateVarDecl(TypeName.UINT256, E, "e0"),
    StateVarDecl(TypeName.UINT256, G, "g0"),
)

READ = {A: ("a0", "a1", "e0", "g0"), E: ("e0", "g0"), G: ("g0",)}
WRITE = {A: ("a0", "a1", "e0"), E: ("e0",), G: ("g0",)}
CALLS = {A: (A, E), E: (E,), G: (G,)}

class Signature(NamedTuple):
    name: str
    scope: ScopeTag
    params: Tuple[str, ...]

class OracleCase(NamedTuple):
    """Contrato, transacción (remitente, función, argumentos) y estado inicial"""
    contract: ContractDecl
    sender: Tuple[int, int]
    func: str
    args: Tuple[int, ...]
    initial: Dict[str, int]

def _uint_exp(draw, readable: List[str], depth: int = 0):
    if depth >= 2 or draw(st.booleans()):
        if readable and draw(st.booleans()):
            return Ident(draw(st.sampled_from(readable)))
        return Literal(TypedValue.uint(draw(st.integers(0, 5))))
    op = draw(st.sampled_from(["+", "-", "*"]))
    return BuiltinOp(op, _uint_exp(draw, readable, depth + 1), _uint_exp(draw, readable, depth + 1))

def _cond(draw, readable: List[str]):
    if draw(st.integers(0, 5)) == 0:
        return Literal(TypedValue.boolean(draw(st.booleans())))
    op = draw(st.sampled_from(["<", "<=", "==", "!=", ">", ">="]))
    return BuiltinOp(op, _uint_exp(draw, readable), _uint_exp(draw, readable))

def _simple_stmt(draw, sig: Signature, readable: List[str], writable: List[str], others: List[Signature]):
    """Asignación, skip o relay (sin declaraciones: válido dentro de bloques)"""
    choice = draw(st.integers(0, 5))
    if choice <= 2 and writable:
        return Assign(draw(st.sampled_from(writable)), _uint_exp(draw, readable))
    if choice >= 4 and sig.scope is not G:
        relay = _relay(draw, sig, readable, others)
        if relay is not None:
            return relay
    return Skip()

def _relay(draw, sig: Signature, readable: List[str], others: List[Signature]) -> Optional[Relay]:
    candidates = [s for s in others if s.scope is not G or sig.scope is not G]
    if not candidates:
        return None
    target = draw(st.sampled_from(candidates))
    args = tuple(_uint_exp(draw, readable) for _ in target.params)
    if target.scope is A:
        r = draw(st.integers(0, 2))
        j = draw(st.integers(0, 2))
        return Relay(AtExp(Literal(TypedValue.address(r, j))), target.name, args)
    if target.scope is E:
        return Relay(AtEngines(), target.name, args)
    return Relay(AtGlobal(), target.name, args)

@st.composite
def oracle_cases(draw) -> OracleCase:
    count = draw(st.integers(1, 3))
    sigs = []
    for idx in range(count):
        scope = draw(scopes)
        arity = draw(st.integers(0, 1))
        sigs.append(Signature(f"f{idx}", scope, tuple(f"p{idx}" for _ in range(arity))))

    functions = []
    for idx, sig in enumerate(sigs):
        readable = list(READ[sig.scope]) + list(sig.params)
        writable = list(WRITE[sig.scope])
        callees = [s for s in sigs[:idx] if s.scope in CALLS[sig.scope]]
        body = []
        temps = 0
        budget = draw(st.integers(1, 3))
        while len(body) < budget:
            kind = draw(st.sampled_from(["assign", "decl", "if", "loop", "relay", "call"]))
            if kind == "decl":
                name = f"t{idx}_{temps}"
                temps += 1
                body.append(TempDecl(TypeName.UINT256, name))
                readable.append(name)
                writable.append(name)
            elif kind == "if":
                then = _simple_stmt(draw, sig, readable, writable, sigs)
                orelse = _simple_stmt(draw, sig, readable, writable, sigs)
                body.append(If(_cond(draw, readable), then, orelse))
            elif kind == "loop" and len(body) + 2 <= budget:
                counter = f"t{idx}_{temps}"
                temps += 1
                bound = draw(st.integers(0, 3))
                inner = _simple_stmt(draw, sig, readable, writable, sigs)
                body.append(TempDecl(TypeName.UINT256, counter))
                body.append(While(
                    BuiltinOp("<", Ident(counter), Literal(TypedValue.uint(bound))),
                    seq([Assign(counter, BuiltinOp("+", Ident(counter), Literal(TypedValue.uint(1)))), inner]),
                ))
                readable.append(counter)
            elif kind == "call" and callees:
                callee = draw(st.sampled_from(callees))
                body.append(Call(callee.name, tuple(_uint_exp(draw, readable) for _ in callee.params)))
            elif kind == "relay" and sig.scope is not G:
                relay = _relay(draw, sig, readable, sigs)
                body.append(relay if relay is not None else Skip())
            else:
                body.append(_simple_stmt(draw, sig, readable, writable, sigs))
        functions.append(FuncDecl(
            name=sig.name,
            params=tuple(Param(TypeName.UINT256, p) for p in sig.params),
            scope=sig.scope,
            return_type=None,
            body=seq(body),
        ))

    contract = ContractDecl("Oracle", ORACLE_STATE, tuple(functions))
    target = draw(st.sampled_from(sigs))
    initial = {
        f"{name}@{i}.{j}": draw(st.integers(0, 9))
        for name in ("a0", "a1") for i in (1, 2) for j in (1, 2)
    }
    initial.update({f"e0@{i}": draw(st.integers(0, 9)) for i in (1, 2)})
    initial["g0"] = draw(st.integers(0, 9))
    return OracleCase(
        contract=contract,
        sender=(draw(st.integers(1, 2)), draw(st.integers(1, 2))),
        func=target.name,
        args=tuple(draw(st.integers(0, 5)) for _ in target.params),
        initial=initial,
    )
