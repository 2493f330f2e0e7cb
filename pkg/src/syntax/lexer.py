"""
Analizador léxico de Crystality.
"""

from __future__ import annotations

import re
from typing import List, NamedTuple

from src.errors import ParseError

KEYWORDS = frozenset({
    "contract", "function", "returns", "if", "then", "else", "while",
    "skip", "relay", "return", "true", "false",
    "uint256", "bool", "address",
    # reservado para el slot de retorno
    "rt",
})


class Token(NamedTuple):
    kind: str
    value: str
    line: int
    column: int

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>//[^\n]*)
  | (?P<scope>@(?:engines|engine|address|global)(?![A-Za-z0-9_]))
  | (?P<int>[0-9]+)
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym>:=|<=|>=|==|!=|[<>+\-*/{}(),;@])
    """,
    re.VERBOSE,
)

def tokenize(source: str) -> List[Token]:
    """
    Convierte el fuente en una lista de tokens terminada en EOF.

    Args:
        source: Texto del contrato

    Returns:
        Lista de tokens con línea y columna (base 1)

    Raises:
        ParseError: Si aparece un carácter fuera del alfabeto
    """
    tokens: List[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        column = pos - line_start + 1
        if match is None:
            raise ParseError(line, column, {"token"}, source[pos])
        kind = match.lastgroup
        text = match.group()
        if kind == "nl":
            line += 1
            line_start = match.end()
        elif kind == "scope":
            tokens.append(Token(text, text, line, column))
        elif kind == "int":
            tokens.append(Token("INT", text, line, column))
        elif kind == "word":
            tokens.append(Token(text if text in KEYWORDS else "IDENT", text, line, column))
        elif kind == "sym":
            tokens.append(Token(text, text, line, column))
        pos = match.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens
