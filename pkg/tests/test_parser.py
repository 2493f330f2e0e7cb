"""
Tests del lexer y el parser.
"""

import pytest

from config.constants import FilePaths
from src.errors import ParseError
from src.syntax import ScopeTag, TypeName, TypedValue, parse_contract
from src.syntax.lexer import tokenize
from src.syntax.nodes import (
    AtEngines, AtExp, AtGlobal, Assign, BuiltinOp, Call, CallExp, Ident, If, Literal,
    Relay, Return, Skip, TempDecl, While, flatten,
)

def _body(source_body: str, header: str = "function f() @address returns"):
    contract = parse_contract(f"contract C {{ uint256 @address x; {header} {{ {source_body} }} }}")
    return flatten(contract.functions[0].body)

def test_my_token_listing(my_token):
    assert my_token.name == "MyToken"
    assert len(my_token.state_vars) == 1
    decl = my_token.state_vars[0]
    assert (decl.type_name, decl.scope, decl.name) == (TypeName.UINT256, ScopeTag.ADDRESS, "balance")

    (transfer,) = my_token.functions
    assert transfer.name == "transfer"
    assert transfer.scope is ScopeTag.ADDRESS
    assert transfer.return_type is None
    assert [p.name for p in transfer.params] == ["payee", "amount"]
    assert [p.type_name for p in transfer.params] == [TypeName.ADDRESS, TypeName.UINT256]

    (stmt,) = flatten(transfer.body)
    assert isinstance(stmt, If)
    assert stmt.cond == BuiltinOp("<=", Ident("amount"), Ident("balance"))
    then = flatten(stmt.then)
    assert then[0] == Assign("balance", BuiltinOp("-", Ident("balance"), Ident("amount")))
    assert then[1] == Relay(AtExp(Ident("payee")), "mint", (Ident("amount"),))
    assert stmt.orelse == Skip()

def test_bundled_token_matches_listing(my_token):
    source = FilePaths.MY_TOKEN_PATH.read_text(encoding="utf-8")
    assert parse_contract(source) == my_token

def test_empty_contract():
    contract = parse_contract("contract E { }")
    assert contract.name == "E"
    assert contract.state_vars == ()
    assert contract.functions == ()

def test_missing_scope_reports_identifier_position():
    with pytest.raises(ParseError) as info:
        parse_contract("contract X { uint256 balance; }")
    error = info.value
    assert (error.line, error.column) == (1, 22)
    assert set(error.expected) == {"@address", "@engine", "@global"}
    assert error.found == "balance"

def test_error_position_on_later_line():
    source = "contract X {\n    uint256 @address b;\n    function f() @address returns { b := ; }\n}"
    with pytest.raises(ParseError) as info:
        parse_contract(source)
    assert info.value.line == 3
    assert "INT" in info.value.expected

def test_parse_is_deterministic(my_token_source):
    assert parse_contract(my_token_source) == parse_contract(my_token_source)

def test_comments_are_ignored():
    contract = parse_contract("// cabecera\ncontract C { // nada\n}\n")
    assert contract.name == "C"

def test_rt_is_reserved():
    with pytest.raises(ParseError):
        parse_contract("contract C { uint256 @address rt; }")

def test_unknown_character():
    with pytest.raises(ParseError) as info:
        parse_contract("contract C { # }")
    assert info.value.column == 14

def test_operator_precedence():
    (stmt,) = _body("x := 1 + 2 * 3 <= 4 - 1;")
    assert stmt.exp == BuiltinOp(
        "<=",
        BuiltinOp("+", Literal(TypedValue.uint(1)),
                  BuiltinOp("*", Literal(TypedValue.uint(2)), Literal(TypedValue.uint(3)))),
        BuiltinOp("-", Literal(TypedValue.uint(4)), Literal(TypedValue.uint(1))),
    )

def test_left_associativity_and_parentheses():
    first, second = _body("x := 5 - 2 - 1; x := 5 - (2 - 1);")
    five, two, one = (Literal(TypedValue.uint(v)) for v in (5, 2, 1))
    assert first.exp == BuiltinOp("-", BuiltinOp("-", five, two), one)
    assert second.exp == BuiltinOp("-", five, BuiltinOp("-", two, one))

def test_literals():
    stmts = _body("bool b; address a; b := true; a := address(2, 3);")
    assert stmts[0] == TempDecl(TypeName.BOOL, "b")
    assert stmts[1] == TempDecl(TypeName.ADDRESS, "a")
    assert stmts[2].exp == Literal(TypedValue.boolean(True))
    assert stmts[3].exp == Literal(TypedValue.address(2, 3))

def test_uint256_literal_out_of_range():
    with pytest.raises(ParseError):
        _body(f"x := {2 ** 256};")

def test_relay_targets():
    stmts = _body("relay @engines tick(); relay @global bump(1); relay @address(2, 1) mint(3);")
    assert isinstance(stmts[0].target, AtEngines)
    assert isinstance(stmts[1].target, AtGlobal)
    assert stmts[2].target == AtExp(Literal(TypedValue.address(2, 1)))

def test_calls_return_and_loops():
    stmts = _body("g(1, x); x := h(); while (x < 3) { x := x + 1; } return x;",
                  header="function f() @address returns uint256")
    assert stmts[0] == Call("g", (Literal(TypedValue.uint(1)), Ident("x")))
    assert stmts[1].exp == CallExp("h", ())
    assert isinstance(stmts[2], While)
    assert stmts[3] == Return(Ident("x"))

def test_skip_semicolon_is_optional():
    assert _body("skip") == _body("skip;")

def test_spans_are_recorded(my_token):
    transfer = my_token.functions[0]
    assert transfer.span[0] == 4
    assert my_token.state_vars[0].span == (3, 5)

def test_tokenize_scopes_and_symbols():
    kinds = [token.kind for token in tokenize("@engines @ x := y != z;")]
    assert kinds == ["@engines", "@", "IDENT", ":=", "IDENT", "!=", "IDENT", ";", "EOF"]
