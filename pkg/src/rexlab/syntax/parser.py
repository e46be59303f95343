"""
Recursive-descent parsers for the two concrete syntaxes.

Indexed:  term := "\\" term | app      app := atom+
          atom := INDEX | "(" term ")" | atom "[" term "]" | "?" IDENT "{" INDEX,* "}"
Named:    term := "\\" IDENT "." term | app
          atom := IDENT | "(" term ")" | atom "[" IDENT ":=" term "]" | "?" IDENT "{" IDENT,* "}"

The closure postfix binds tighter than application; "λ" is accepted for "\\".
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, List, NoReturn, Union

from rexlab.errors import ParseError
from rexlab.terms.indexed import Abs, App, Clos, Index, Meta, Term
from rexlab.terms.named import ExSub, NAbs, NApp, NamedTerm, NMeta, Var
from rexlab.terms.natset import NatSet


class World(str, Enum):
    INDEXED = "indexed"
    NAMED = "named"


class Tok(str, Enum):
    LAMBDA = "lambda"
    DOT = "."
    LPAREN = "("
    RPAREN = ")"
    LBRACK = "["
    RBRACK = "]"
    LBRACE = "{"
    RBRACE = "}"
    COMMA = ","
    ASSIGN = ":="
    QMARK = "?"
    INT = "integer"
    IDENT = "identifier"
    EOF = "end of input"


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
    |(?P<lambda>\\|λ)
    |(?P<assign>:=)
    |(?P<punct>[.()\[\]{},?])
    |(?P<int>[0-9]+)
    |(?P<ident>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: Tok
    text: str
    line: int
    column: int


def tokenize(source: str) -> Iterator[Token]:
    line, line_start, offset = 1, 0, 0
    while offset < len(source):
        match = _TOKEN_RE.match(source, offset)
        column = offset - line_start + 1
        if match is None:
            raise ParseError(f"unexpected character {source[offset]!r}", line, column)
        kind, text = match.lastgroup, match.group()
        if kind == "ws":
            for i, char in enumerate(text):
                if char == "\n":
                    line += 1
                    line_start = offset + i + 1
        elif kind == "lambda":
            yield Token(Tok.LAMBDA, text, line, column)
        elif kind == "assign":
            yield Token(Tok.ASSIGN, text, line, column)
        elif kind == "punct":
            yield Token(Tok(text), text, line, column)
        elif kind == "int":
            yield Token(Tok.INT, text, line, column)
        else:
            yield Token(Tok.IDENT, text, line, column)
        offset = match.end()
    yield Token(Tok.EOF, "", line, offset - line_start + 1)


class _Parser:
    def __init__(self, source: str):
        self.tokens: List[Token] = list(tokenize(source))
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        if token.kind is not Tok.EOF:
            self.index += 1
        return token

    def expect(self, kind: Tok) -> Token:
        token = self.current
        if token.kind is not kind:
            self.fail(f"expected {kind.value}")
        return self.advance()

    def fail(self, message: str) -> NoReturn:
        token = self.current
        found = token.kind.value if token.kind is Tok.EOF else repr(token.text)
        raise ParseError(f"{message}, found {found}", token.line, token.column)

    def finish(self, term):
        if self.current.kind is not Tok.EOF:
            self.fail("expected end of input")
        return term

    def sequence(self, item: Callable[[], object]) -> list:
        """Comma separated items up to a closing brace (opening brace consumed)"""
        items = []
        if self.current.kind is not Tok.RBRACE:
            items.append(item())
            while self.current.kind is Tok.COMMA:
                self.advance()
                items.append(item())
        self.expect(Tok.RBRACE)
        return items


class IndexedParser(_Parser):
    _ATOM_START = (Tok.INT, Tok.LPAREN, Tok.QMARK)

    def parse(self) -> Term:
        return self.finish(self.term())

    def term(self) -> Term:
        if self.current.kind is Tok.LAMBDA:
            self.advance()
            return Abs(self.term())
        term = self.atom()
        while self.current.kind in self._ATOM_START:
            term = App(term, self.atom())
        return term

    def atom(self) -> Term:
        term = self.primary()
        while self.current.kind is Tok.LBRACK:
            self.advance()
            subst = self.term()
            self.expect(Tok.RBRACK)
            term = Clos(term, subst)
        return term

    def primary(self) -> Term:
        token = self.current
        if token.kind is Tok.INT:
            return Index(self.index_value())
        if token.kind is Tok.LPAREN:
            self.advance()
            term = self.term()
            self.expect(Tok.RPAREN)
            return term
        if token.kind is Tok.QMARK:
            self.advance()
            name = self.expect(Tok.IDENT).text
            self.expect(Tok.LBRACE)
            return Meta(name, NatSet.of(self.sequence(self.index_value)))
        self.fail("expected an index, '(' or a metavariable")

    def index_value(self) -> int:
        token = self.expect(Tok.INT)
        value = int(token.text)
        if value < 1:
            raise ParseError("de Bruijn indices start at 1", token.line, token.column)
        return value


class NamedParser(_Parser):
    _ATOM_START = (Tok.IDENT, Tok.LPAREN, Tok.QMARK)

    def parse(self) -> NamedTerm:
        return self.finish(self.term())

    def term(self) -> NamedTerm:
        if self.current.kind is Tok.LAMBDA:
            self.advance()
            binder = self.expect(Tok.IDENT).text
            self.expect(Tok.DOT)
            return NAbs(binder, self.term())
        term = self.atom()
        while self.current.kind in self._ATOM_START:
            term = NApp(term, self.atom())
        return term

    def atom(self) -> NamedTerm:
        term = self.primary()
        while self.current.kind is Tok.LBRACK:
            self.advance()
            binder = self.expect(Tok.IDENT).text
            self.expect(Tok.ASSIGN)
            subst = self.term()
            self.expect(Tok.RBRACK)
            term = ExSub(term, binder, subst)
        return term

    def primary(self) -> NamedTerm:
        token = self.current
        if token.kind is Tok.IDENT:
            return Var(self.advance().text)
        if token.kind is Tok.LPAREN:
            self.advance()
            term = self.term()
            self.expect(Tok.RPAREN)
            return term
        if token.kind is Tok.QMARK:
            self.advance()
            name = self.expect(Tok.IDENT).text
            self.expect(Tok.LBRACE)
            names = self.sequence(lambda: self.expect(Tok.IDENT).text)
            return NMeta(name, frozenset(names))
        self.fail("expected a variable, '(' or a metavariable")


def parse_indexed(source: str) -> Term:
    return IndexedParser(source).parse()


def parse_named(source: str) -> NamedTerm:
    return NamedParser(source).parse()


def parse_term(source: str, world: Union[World, str]) -> Union[Term, NamedTerm]:
    if World(world) is World.NAMED:
        return parse_named(source)
    return parse_indexed(source)
