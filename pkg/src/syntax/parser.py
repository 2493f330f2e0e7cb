"""
Parser descendente recursivo para la gramática de Crystality.

Precedencia de expresiones (de menor a mayor), todas asociativas a izquierda:
    1. comparaciones (<=, <, ==, >=, >, !=)
    2. suma y resta
    3. producto y división
    4. primarias (literales, identificadores, llamadas, paréntesis)
"""

from __future__ import annotations

from typing import Iterable, List, NoReturn, Optional, Tuple

from config.constants import Config
from src.errors import ParseError
from src.syntax.lexer import Token, tokenize
from src.syntax.nodes import (
    AtEngines, AtExp, AtGlobal, Assign, BuiltinOp, Call, CallExp, ContractDecl,
    Exp, FuncDecl, Ident, If, Literal, Param, Relay, RelayTargetExpr, Return,
    Skip, StateVarDecl, Stmt, TempDecl, While, seq,
)
from src.syntax.types import U64_MAX, UINT256_MAX, ScopeTag, TypeName, TypedValue
from utils.helpers import setup_logging

logger = setup_logging(__name__)

TYPE_KEYWORDS = ("uint256", "bool", "address")
DECL_SCOPES = ("@address", "@engine", "@global")
STMT_START = ("if", "while", "skip", "relay", "return", "IDENT") + TYPE_KEYWORDS
COMPARISON = ("<=", "<", "==", ">=", ">", "!=")
ADDITIVE = ("+", "-")
MULTIPLICATIVE = ("*", "/")
PRIMARY_START = ("INT", "true", "false", "address", "IDENT", "(")

class Parser:
    """Parser de un contrato a partir de su lista de tokens"""

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    # -- navegación -----------------------------------------------------

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        idx = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[idx]

    def advance(self) -> Token:
        token = self.current
        if token.kind != "EOF":
            self.pos += 1
        return token

    def check(self, *kinds: str) -> bool:
        return self.current.kind in kinds

    def match(self, *kinds: str) -> Optional[Token]:
        if self.check(*kinds):
            return self.advance()
        return None

    def expect(self, *kinds: str) -> Token:
        if not self.check(*kinds):
            self.error(kinds)
        return self.advance()

    def error(self, expected: Iterable[str]) -> NoReturn:
        token = self.current
        raise ParseError(token.line, token.column, expected, token.value or token.kind)

    @staticmethod
    def span_of(token: Token) -> Tuple[int, int]:
        return (token.line, token.column)

    # -- declaraciones --------------------------------------------------

    def parse_contract(self) -> ContractDecl:
        start = self.expect("contract")
        name = self.expect("IDENT").value
        self.expect("{")

        state_vars: List[StateVarDecl] = []
        while self.check(*TYPE_KEYWORDS):
            state_vars.append(self.parse_state_var())

        functions: List[FuncDecl] = []
        while self.check("function"):
            functions.append(self.parse_function())

        if not self.check("}"):
            self.error(("function", "}") if functions else ("function", "}") + TYPE_KEYWORDS)
        self.advance()
        self.expect("EOF")
        return ContractDecl(name, tuple(state_vars), tuple(functions), span=self.span_of(start))

    def parse_type(self) -> TypeName:
        return TypeName.from_keyword(self.expect(*TYPE_KEYWORDS).value)

    def parse_scope(self) -> ScopeTag:
        return ScopeTag(self.expect(*DECL_SCOPES).value[1:])

    def parse_state_var(self) -> StateVarDecl:
        start = self.current
        type_name = self.parse_type()
        scope = self.parse_scope()
        name = self.expect("IDENT").value
        self.expect(";")
        return StateVarDecl(type_name, scope, name, span=self.span_of(start))

    def parse_function(self) -> FuncDecl:
        start = self.expect("function")
        name = self.expect("IDENT").value
        params = self.parse_params()
        scope = self.parse_scope()
        self.expect("returns")
        return_type = self.parse_type() if self.check(*TYPE_KEYWORDS) else None
        self.expect("{")
        body = self.parse_block()
        self.expect("}")
        return FuncDecl(name, params, scope, return_type, body, span=self.span_of(start))

    def parse_params(self) -> Tuple[Param, ...]:
        self.expect("(")
        params: List[Param] = []
        if self.match(")"):
            return ()
        while True:
            start = self.current
            type_name = self.parse_type()
            params.append(Param(type_name, self.expect("IDENT").value, span=self.span_of(start)))
            if self.match(")"):
                return tuple(params)
            self.expect(",", ")")

    # -- sentencias -----------------------------------------------------

    def parse_block(self) -> Stmt:
        """Una o más sentencias hasta la llave de cierre"""
        stmts = [self.parse_stmt()]
        while not self.check("}"):
            stmts.append(self.parse_stmt())
        return seq(stmts)

    def parse_braced(self) -> Stmt:
        self.expect("{")
        body = self.parse_block()
        self.expect("}")
        return body

    def parse_stmt(self) -> Stmt:
        token = self.current
        span = self.span_of(token)

        if self.match("if"):
            self.expect("(")
            cond = self.parse_exp()
            self.expect(")")
            self.expect("then")
            then = self.parse_braced()
            self.expect("else")
            orelse = self.parse_braced()
            return If(cond, then, orelse, span=span)

        if self.match("while"):
            self.expect("(")
            cond = self.parse_exp()
            self.expect(")")
            return While(cond, self.parse_braced(), span=span)

        if self.match("skip"):
            self.match(";")
            return Skip(span=span)

        if self.check(*TYPE_KEYWORDS):
            type_name = self.parse_type()
            name = self.expect("IDENT").value
            self.expect(";")
            return TempDecl(type_name, name, span=span)

        if self.match("relay"):
            target = self.parse_relay_target()
            func = self.expect("IDENT").value
            args = self.parse_args()
            self.expect(";")
            return Relay(target, func, args, span=span)

        if self.match("return"):
            exp = self.parse_exp()
            self.expect(";")
            return Return(exp, span=span)

        if self.check("IDENT"):
            name = self.advance().value
            if self.match(":="):
                exp = self.parse_exp()
                self.expect(";")
                return Assign(name, exp, span=span)
            if self.check("("):
                args = self.parse_args()
                self.match(";")
                return Call(name, args, span=span)
            self.error((":=", "("))

        self.error(STMT_START)

    def parse_relay_target(self) -> RelayTargetExpr:
        token = self.current
        span = self.span_of(token)
        if self.match("@engines"):
            return AtEngines(span=span)
        if self.match("@global"):
            return AtGlobal(span=span)
        if self.match("@"):
            return AtExp(self.parse_exp(), span=span)
        if self.check("@address") and self.peek().kind == "(":
            # "@address(r, j)" sin espacio: literal de dirección como destino
            self.advance()
            return AtExp(self.parse_address_literal(token), span=span)
        self.error(("@", "@engines", "@global"))

    def parse_args(self) -> Tuple[Exp, ...]:
        self.expect("(")
        if self.match(")"):
            return ()
        args = [self.parse_exp()]
        while self.match(","):
            args.append(self.parse_exp())
        self.expect(",", ")")
        return tuple(args)

    # -- expresiones ----------------------------------------------------

    def parse_exp(self) -> Exp:
        left = self.parse_additive()
        while self.check(*COMPARISON):
            op = self.advance()
            left = BuiltinOp(op.value, left, self.parse_additive(), span=left.span)
        return left

    def parse_additive(self) -> Exp:
        left = self.parse_term()
        while self.check(*ADDITIVE):
            op = self.advance()
            left = BuiltinOp(op.value, left, self.parse_term(), span=left.span)
        return left

    def parse_term(self) -> Exp:
        left = self.parse_primary()
        while self.check(*MULTIPLICATIVE):
            op = self.advance()
            left = BuiltinOp(op.value, left, self.parse_primary(), span=left.span)
        return left

    def parse_primary(self) -> Exp:
        token = self.current
        span = self.span_of(token)

        if self.match("INT"):
            value = int(token.value)
            if value > UINT256_MAX:
                raise ParseError(token.line, token.column, {"uint256 literal"}, token.value)
            return Literal(TypedValue.uint(value), span=span)
        if self.match("true"):
            return Literal(TypedValue.boolean(True), span=span)
        if self.match("false"):
            return Literal(TypedValue.boolean(False), span=span)
        if self.match("address"):
            return self.parse_address_literal(token)
        if self.match("IDENT"):
            if self.check("("):
                return CallExp(token.value, self.parse_args(), span=span)
            return Ident(token.value, span=span)
        if self.match("("):
            inner = self.parse_exp()
            self.expect(")")
            return inner
        self.error(PRIMARY_START)

    def parse_address_literal(self, start: Token) -> Literal:
        """Resto de 'address(r, j)' una vez consumida la palabra clave"""
        self.expect("(")
        engine = self._u64()
        self.expect(",")
        index = self._u64()
        self.expect(")")
        return Literal(TypedValue.address(engine, index), span=self.span_of(start))

    def _u64(self) -> int:
        token = self.expect("INT")
        value = int(token.value)
        if value > U64_MAX:
            raise ParseError(token.line, token.column, {"u64 literal"}, token.value)
        return value

def parse_contract(source: str) -> ContractDecl:
    """
    Parsea el texto de un contrato.

    Args:
        source: Fuente UTF-8 del contrato

    Returns:
        ContractDecl con posiciones anotadas

    Raises:
        ParseError: Con línea, columna y conjunto de tokens esperados
    """
    if len(source) > Config.MAX_SOURCE_LENGTH:
        raise ParseError(1, 1, {f"fuente de hasta {Config.MAX_SOURCE_LENGTH} caracteres"}, "...")

    parser = Parser(tokenize(source))
    try:
        contract = parser.parse_contract()
    except RecursionError:
        token = parser.current
        raise ParseError(token.line, token.column, {"anidamiento menor"}, token.value) from None

    logger.debug(f"[OK] Contrato parseado: {contract.name} "
                 f"({len(contract.state_vars)} variables, {len(contract.functions)} funciones)")
    return contract
