# expressions/parser.py
"""
Tokenizer and recursive-descent parser for ring expressions.

    stmt    := "let" ident "=" expr | expr
    expr    := term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := atom ("^" nat)?
    atom    := call | matrix | point | int | "mod" "(" ["-"] int ")" | ident | "(" expr ")"
    call    := ("inv" | "neg" | "minpoly" | "annpoly") "(" expr ")"
             | "apply" "(" expr "," expr ")"
    matrix  := "[" "[" entry "," entry "]" "," "[" entry "," entry "]" "]"
    point   := "(" entry "," entry ")"
    entry   := ["-"] int | "mod" "(" ["-"] int ")"

Literals are checked against the ring while parsing: the bottom-left matrix
entry must be a multiple of p^{m-1}, and no entry may leave its ring unless
it is wrapped in mod(...). The same holds for integer atoms, which must lie
in [0, p^m). Every offset counts UTF-8 bytes from the start of the line.
"""
import logging
import re
from dataclasses import dataclass

from ..algebra import make_matrix, make_point
from ..exceptions import LexError, LiteralError, ParseError

logger = logging.getLogger(__name__)

FUNCTIONS = {'inv': 1, 'neg': 1, 'minpoly': 1, 'annpoly': 1, 'apply': 2}
KEYWORDS = {'let', 'mod', *FUNCTIONS}

TOKEN_PATTERNS = [
    ('INT', r'\d+'),
    ('IDENT', r'[A-Za-z_][A-Za-z0-9_]*'),
    ('LBRACKET', r'\['),
    ('RBRACKET', r'\]'),
    ('LPAREN', r'\('),
    ('RPAREN', r'\)'),
    ('COMMA', r','),
    ('PLUS', r'\+'),
    ('MINUS', r'-'),
    ('STAR', r'\*'),
    ('CARET', r'\^'),
    ('EQUALS', r'='),
]
TOKEN_RE = re.compile('|'.join(f'(?P<{kind}>{pattern})' for kind, pattern in TOKEN_PATTERNS))
SKIP_RE = re.compile(r'\s+|#.*')


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int  # bytes, as in LexError


# Syntax tree

@dataclass(frozen=True)
class IntLit:
    value: int
    offset: int


@dataclass(frozen=True)
class MatrixLit:
    value: object
    offset: int


@dataclass(frozen=True)
class PointLit:
    value: object
    offset: int


@dataclass(frozen=True)
class Var:
    name: str
    offset: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    offset: int


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int
    offset: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    offset: int


@dataclass(frozen=True)
class Let:
    name: str
    expr: object
    offset: int


@dataclass(frozen=True)
class Entry:
    """One literal entry before it is checked against its ring."""
    value: int
    reduce: bool
    offset: int


def byte_offset(source, position):
    return len(source[:position].encode('utf-8'))


def tokenize(source):
    """Split one statement into tokens; the last token is always END."""
    tokens = []
    position = 0
    while position < len(source):
        skipped = SKIP_RE.match(source, position)
        if skipped:
            position = skipped.end()
            continue
        match = TOKEN_RE.match(source, position)
        if not match:
            raise LexError(f"illegal character {source[position]!r}", byte_offset(source, position))
        tokens.append(Token(match.lastgroup, match.group(), byte_offset(source, position)))
        position = match.end()
    tokens.append(Token('END', '', byte_offset(source, len(source))))
    return tokens


class Parser:
    def __init__(self, tokens, params):
        self.tokens = tokens
        self.params = params
        self.position = 0

    @property
    def current(self):
        return self.tokens[self.position]

    def advance(self):
        token = self.current
        if token.kind != 'END':
            self.position += 1
        return token

    def expect(self, kind, what):
        token = self.current
        if token.kind != kind:
            found = token.text or 'end of input'
            raise ParseError(f"expected {what}, found {found!r}", token.offset)
        return self.advance()

    def statement(self):
        if self.current.kind == 'END':
            return None
        if self.current.kind == 'IDENT' and self.current.text == 'let':
            start = self.advance()
            name = self.expect('IDENT', 'a name after let')
            if name.text in KEYWORDS:
                raise ParseError(f"'{name.text}' is reserved", name.offset)
            self.expect('EQUALS', "'='")
            node = Let(name.text, self.expr(), start.offset)
        else:
            node = self.expr()
        if self.current.kind != 'END':
            raise ParseError(f"unexpected {self.current.text!r}", self.current.offset)
        return node

    def expr(self):
        node = self.term()
        while self.current.kind in ('PLUS', 'MINUS'):
            op = self.advance()
            node = BinOp(op.text, node, self.term(), op.offset)
        return node

    def term(self):
        node = self.factor()
        while self.current.kind == 'STAR':
            op = self.advance()
            node = BinOp('*', node, self.factor(), op.offset)
        return node

    def factor(self):
        node = self.atom()
        if self.current.kind == 'CARET':
            caret = self.advance()
            if self.current.kind != 'INT':
                raise ParseError("exponent must be a nonnegative integer literal", self.current.offset)
            node = Power(node, int(self.advance().text), caret.offset)
        return node

    def atom(self):
        token = self.current
        if token.kind == 'INT':
            self.advance()
            value = int(token.text)
            if value >= self.params.modulus:
                raise LiteralError(
                    f"integer {value} is outside [0, {self.params.modulus}); write mod({value}) to reduce it",
                    token.offset,
                )
            return IntLit(value, token.offset)
        if token.kind == 'LBRACKET':
            return self.matrix()
        if token.kind == 'LPAREN':
            if self.at_point():
                return self.point()
            self.advance()
            node = self.expr()
            self.expect('RPAREN', "')'")
            return node
        if token.kind == 'IDENT':
            if token.text in FUNCTIONS:
                return self.call()
            if token.text == 'mod':
                entry = self.entry()
                return IntLit(self.checked(entry, self.params.modulus, 'scalar'), entry.offset)
            if token.text in KEYWORDS:
                raise ParseError(f"'{token.text}' cannot be used here", token.offset)
            self.advance()
            return Var(token.text, token.offset)
        found = token.text or 'end of input'
        raise ParseError(f"missing operand before {found!r}", token.offset)

    def call(self):
        name = self.advance()
        self.expect('LPAREN', f"'(' after {name.text}")
        args = [self.expr()]
        for _ in range(FUNCTIONS[name.text] - 1):
            self.expect('COMMA', f"',' between the arguments of {name.text}")
            args.append(self.expr())
        self.expect('RPAREN', "')'")
        return Call(name.text, tuple(args), name.offset)

    def entry(self):
        start = self.current
        reduce = start.kind == 'IDENT' and start.text == 'mod'
        if reduce:
            self.advance()
            self.expect('LPAREN', "'(' after mod")
        sign = 1
        if self.current.kind == 'MINUS':
            self.advance()
            sign = -1
        value = sign * int(self.expect('INT', 'an integer entry').text)
        if reduce:
            self.expect('RPAREN', "')'")
        return Entry(value, reduce, start.offset)

    def at_point(self):
        """Whether '(' opens a point literal rather than a parenthesised expression."""
        saved = self.position
        try:
            self.advance()
            self.entry()
            return self.current.kind == 'COMMA'
        except ParseError:
            return False
        finally:
            self.position = saved

    def matrix(self):
        start = self.expect('LBRACKET', "'['")
        rows = []
        for row in range(2):
            if row:
                self.expect('COMMA', "',' between matrix rows")
            self.expect('LBRACKET', "'[' opening a matrix row")
            first = self.entry()
            self.expect('COMMA', "',' between matrix entries")
            second = self.entry()
            self.expect('RBRACKET', "']' closing a matrix row")
            rows.append((first, second))
        self.expect('RBRACKET', "']' closing the matrix")
        (a, b), (c_full, d) = rows
        return MatrixLit(self.matrix_value(a, b, c_full, d), start.offset)

    def point(self):
        start = self.expect('LPAREN', "'('")
        x = self.entry()
        self.expect('COMMA', "','")
        y = self.entry()
        self.expect('RPAREN', "')' closing the point")
        params = self.params
        return PointLit(
            make_point(params, self.checked(x, params.p, 'x'), self.checked(y, params.modulus, 'y')),
            start.offset,
        )

    def checked(self, entry, modulus, label):
        if entry.reduce:
            return entry.value % modulus
        if not 0 <= entry.value < modulus:
            raise LiteralError(f"entry {label} = {entry.value} is outside [0, {modulus})", entry.offset)
        return entry.value

    def matrix_value(self, a, b, c_full, d):
        params = self.params
        a_value = self.checked(a, params.p, 'a')
        b_value = self.checked(b, params.p, 'b')
        c_value = self.checked(c_full, params.modulus, 'bottom-left')
        if c_value % params.top_place:
            raise LiteralError(
                f"bottom-left entry {c_value} is not a multiple of {params.top_place}",
                c_full.offset,
            )
        return make_matrix(
            params, a_value, b_value, c_value // params.top_place,
            self.checked(d, params.modulus, 'd'),
        )


def parse(tokens, params):
    """The syntax tree of one statement, or None for a blank line."""
    node = Parser(tokens, params).statement()
    logger.debug("parsed %r", node)
    return node


def parse_statement(source, params):
    return parse(tokenize(source), params)
