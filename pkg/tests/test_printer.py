"""
Tests de impresión canónica, serialización JSON y round-trip.
"""

from hypothesis import given, settings

from src.syntax import parse_contract, pretty_print, to_json
from src.syntax.nodes import BuiltinOp, ContractDecl, Ident, Literal
from src.syntax.printer import format_exp, format_stmt
from src.syntax.types import TypedValue
from tests.strategies import contracts

def test_my_token_round_trip(my_token):
    assert parse_contract(pretty_print(my_token)) == my_token

def test_my_token_printed_text(my_token):
    text = pretty_print(my_token)
    assert "    uint256 @address balance;" in text
    assert "relay @ payee mint(amount);" in text
    assert "} else {" in text

def test_empty_contract_text():
    assert pretty_print(ContractDecl("E")) == "contract E {\n}\n"

def test_minimal_parentheses():
    one, two = Literal(TypedValue.uint(1)), Literal(TypedValue.uint(2))
    assert format_exp(BuiltinOp("-", Ident("a"), BuiltinOp("-", one, two))) == "a - (1 - 2)"
    assert format_exp(BuiltinOp("-", BuiltinOp("-", Ident("a"), one), two)) == "a - 1 - 2"
    assert format_exp(BuiltinOp("*", BuiltinOp("+", Ident("a"), one), two)) == "(a + 1) * 2"

def test_format_stmt_single_line(my_token):
    line = format_stmt(my_token.functions[0].body)
    assert "\n" not in line
    assert line.startswith("if (amount <= balance) then {")

@settings(max_examples=1000, deadline=None)
@given(contracts)
def test_round_trip_generated_contracts(contract):
    assert parse_contract(pretty_print(contract)) == contract

def test_json_dump(my_token):
    document = to_json(my_token)
    assert document["node"] == "ContractDecl"
    assert document["state_vars"][0]["scope"] == "address"
    transfer = document["functions"][0]
    assert transfer["name"] == "transfer"
    assert transfer["return_type"] is None
    assert transfer["body"]["node"] == "If"
    assert transfer["body"]["then"]["node"] == "Block"
    assert [s["node"] for s in transfer["body"]["then"]["stmts"]] == ["Assign", "Relay"]

def test_json_dump_literals():
    assert to_json(Literal(TypedValue.address(2, 1))) == {
        "node": "Literal",
        "value": {"type": "address", "value": [2, 1]},
        "span": None,
    }
