"""
Tests del checker estático: matriz de accesos, relays, llamadas y tipos.
"""

import itertools

import pytest

from src.checker import check_access, check_contract, check_relays, render_diagnostics
from src.checker.matrix import can_call, can_read, can_write
from src.syntax import ScopeTag, parse_contract

A, E, G = ScopeTag.ADDRESS, ScopeTag.ENGINE, ScopeTag.GLOBAL

ALLOWED = {
    ("read", A): {A, E, G},
    ("read", E): {E, G},
    ("read", G): {G},
    ("write", A): {A, E},
    ("write", E): {E},
    ("write", G): {G},
}

BODIES = {
    "read": "uint256 t; t := v;",
    "write": "v := 1;",
}

def _codes(diagnostics):
    return sorted(d.code for d in diagnostics if d.is_error)

def _check(source):
    return check_contract(parse_contract(source))

@pytest.mark.parametrize(
    "action, func_scope, var_scope",
    list(itertools.product(("read", "write"), (A, E, G), (A, E, G))),
)
def test_access_matrix(action, func_scope, var_scope):
    source = f"""
    contract M {{
        uint256 @{var_scope.value} v;
        function f() @{func_scope.value} returns {{ {BODIES[action]} }}
    }}
    """
    contract = parse_contract(source)
    result = check_contract(contract)
    allowed = var_scope in ALLOWED[(action, func_scope)]
    assert result.ok is allowed
    if not allowed:
        assert _codes(check_access(contract, result.registry)) == [f"scope-{action}"]

def test_matrix_helpers_agree_with_table():
    for func_scope, var_scope in itertools.product((A, E, G), repeat=2):
        assert can_read(func_scope, var_scope) is (var_scope in ALLOWED[("read", func_scope)])
        assert can_write(func_scope, var_scope) is (var_scope in ALLOWED[("write", func_scope)])
    assert can_call(A, E) and can_call(A, A) and not can_call(A, G)
    assert not can_call(E, A) and not can_call(G, E)

def test_my_token_is_clean(my_token):
    result = check_contract(my_token)
    assert result.ok
    assert result.diagnostics == []

def test_engine_function_reading_address_variable():
    result = _check("""
    contract M {
        uint256 @address balance;
        uint256 @engine total;
        function f() @engine returns { total := balance; }
    }
    """)
    assert _codes(result.diagnostics) == ["scope-read"]

def test_address_function_writing_global():
    result = _check("""
    contract M {
        uint256 @global g;
        function f() @address returns { g := 1; }
    }
    """)
    assert _codes(result.diagnostics) == ["scope-write"]

def test_temporary_resolves_before_state():
    result = _check("""
    contract M {
        uint256 @global g;
        function f(uint256 x) @engine returns { uint256 y; y := x; }
    }
    """)
    assert result.ok

def test_relay_to_mint_is_valid(my_token):
    result = check_contract(my_token)
    assert check_relays(my_token, result.registry) == []

def test_relay_engines_to_address_function():
    result = _check("""
    contract M {
        uint256 @address a;
        function h() @address returns { skip }
        function f() @engine returns { relay @engines h(); }
    }
    """)
    assert _codes(result.diagnostics) == ["relay-target"]

def test_relay_global_from_global_function():
    result = _check("""
    contract M {
        uint256 @global g;
        function bump() @global returns { g := g + 1; }
        function f() @global returns { relay @global bump(); }
    }
    """)
    assert _codes(result.diagnostics) == ["relay-global"]

def test_relay_global_from_engine_function_is_allowed(counter_contract):
    assert check_contract(counter_contract).ok

def test_call_checks():
    result = _check("""
    contract M {
        uint256 @address a;
        function v() @address returns uint256 { return a; }
        function w(uint256 x) @address returns { skip }
        function e() @engine returns { w(1); }
        function f() @address returns { v(); w(); a := w(1); nothing(); }
    }
    """)
    assert _codes(result.diagnostics) == sorted([
        "call-scope", "value-call", "arity", "void-call", "unknown-function",
    ])

def test_return_in_void_function():
    result = _check("""
    contract M {
        function f() @engine returns { return 1; }
    }
    """)
    assert _codes(result.diagnostics) == ["return-void"]

def test_type_errors():
    result = _check("""
    contract M {
        uint256 @address a;
        bool @address b;
        function f() @address returns {
            a := b;
            if (a) then { skip } else { skip }
            a := a + b;
            relay @ a mint(true);
        }
    }
    """)
    codes = _codes(result.diagnostics)
    assert codes.count("type") >= 3
    assert "cond-type" in codes

def test_relay_arguments_must_be_call_free():
    result = _check("""
    contract M {
        uint256 @address balance;
        function amount() @address returns uint256 { return 1; }
        function f(address p) @address returns { relay @ p mint(amount()); }
    }
    """)
    assert "relay-call-arg" in _codes(result.diagnostics)

def test_undefined_and_branch_local_names():
    result = _check("""
    contract M {
        uint256 @engine s;
        function f() @engine returns {
            if (s < 1) then { uint256 t; } else { skip }
            s := t;
            s := u;
        }
    }
    """)
    assert _codes(result.diagnostics) == ["maybe-undefined", "undefined"]

def test_shadowing_and_duplicates():
    result = _check("""
    contract M {
        uint256 @engine s;
        uint256 @engine s;
        function f(uint256 s) @engine returns { uint256 s; }
        function f() @engine returns { skip }
    }
    """)
    codes = _codes(result.diagnostics)
    assert codes.count("shadow") == 2
    assert "duplicate-var" in codes
    assert "duplicate-function" in codes

def test_warnings_do_not_block():
    result = _check("""
    contract M {
        uint256 @engine s;
        function g() @engine returns { uint256 t; }
        function f() @engine returns {
            uint256 t;
            g();
            while (s < 3) { uint256 w; s := s + 1; }
        }
    }
    """)
    assert result.ok
    warnings = sorted(d.code for d in result.diagnostics if not d.is_error)
    assert warnings == ["decl-in-loop", "inherited-temp"]

def test_diagnostics_are_sorted_and_rendered():
    result = _check("""
    contract M {
        uint256 @global g;
        function f() @address returns {
            g := 1;
            g := 2;
        }
    }
    """)
    lines = [d.span[0] for d in result.diagnostics]
    assert lines == sorted(lines)
    text = render_diagnostics(result.diagnostics)
    assert text.splitlines()[0].startswith("error scope-write 5:")
    assert '"code": "scope-write"' in render_diagnostics(result.diagnostics, "json")
