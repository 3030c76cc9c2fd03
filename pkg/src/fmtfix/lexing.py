"""Lossless lexer for Java-like source.

Produces a stream of concrete tokens plus the exact whitespace (trivia)
between them, so that ``render(lex(text)) == text``. Only the lexical
grammar is implemented; no syntax tree is built. ``>>`` and ``>>>`` are
deliberately lexed as separate ``>`` tokens so that closing nested type
arguments never requires parser feedback.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum


class TokenKind(Enum):
    KEYWORD = "Keyword"
    IDENTIFIER = "Identifier"
    SEPARATOR = "Separator"
    OPERATOR = "Operator"
    INT_LITERAL = "IntLiteral"
    FLOAT_LITERAL = "FloatLiteral"
    STRING_LITERAL = "StringLiteral"
    CHAR_LITERAL = "CharLiteral"
    BOOL_LITERAL = "BoolLiteral"
    NULL_LITERAL = "NullLiteral"
    LINE_COMMENT = "LineComment"
    BLOCK_COMMENT = "BlockComment"
    ANNOTATION = "Annotation"


KEYWORDS = frozenset([
    "abstract", "assert", "boolean", "break", "byte", "case", "catch",
    "char", "class", "const", "continue", "default", "do", "double",
    "else", "enum", "extends", "final", "finally", "float", "for", "goto",
    "if", "implements", "import", "instanceof", "int", "interface", "long",
    "native", "new", "package", "private", "protected", "public", "return",
    "short", "static", "strictfp", "super", "switch", "synchronized",
    "this", "throw", "throws", "transient", "try", "void", "volatile",
    "while",
])

SEPARATORS = frozenset(["(", ")", "{", "}", "[", "]", ";", ",", ".", "@"])

# '>>' and '>>>' are intentionally absent: nested generics close with a
# run of plain '>' tokens (the javalang trick).
OPERATORS = [
    ">>>=", ">>=", "<<=", "...",
    "->", "::", "<<", "%=", "^=", "|=", "&=", "/=", "*=", "-=", "+=",
    "--", "++", "||", "&&", "!=", ">=", "<=", "==",
    "%", "^", "|", "&", "/", "*", "-", "+", ":", "?", "~", "!", "<", ">", "=",
]

_IDENT_START_CATEGORIES = {"Lu", "Ll", "Lt", "Lm", "Lo", "Nl"}
_IDENT_PART_CATEGORIES = _IDENT_START_CATEGORIES | {"Mn", "Mc", "Nd", "Pc"}

PUNCTUATION = frozenset([".", ",", "(", ")", "[", "]", "{", "}", ";"])


class LexError(Exception):
    def __init__(self, line: int, column: int, reason: str):
        super().__init__(f"{line}:{column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason


@dataclass(frozen=True)
class ConcreteToken:
    kind: TokenKind
    lexeme: str
    line: int    # 1-based line of the first character
    column: int  # 1-based column of the first character (tab = 1 column)

    def __repr__(self):
        return f"ConcreteToken({self.kind.value}, {self.lexeme!r}, {self.line}:{self.column})"


@dataclass(frozen=True)
class Trivia:
    """Whitespace between two tokens, as runs of a single character."""

    runs: tuple[tuple[str, int], ...] = ()  # (char, count); adjacent runs differ

    @classmethod
    def from_text(cls, text: str) -> "Trivia":
        runs: list[tuple[str, int]] = []
        for ch in text:
            if runs and runs[-1][0] == ch:
                runs[-1] = (ch, runs[-1][1] + 1)
            else:
                runs.append((ch, 1))
        return cls(tuple(runs))

    def text(self) -> str:
        return "".join(ch * n for ch, n in self.runs)

    def __bool__(self) -> bool:
        return bool(self.runs)

    @property
    def newlines(self) -> int:
        return sum(n for ch, n in self.runs if ch == "\n")

    def after_last_newline(self) -> str:
        """Characters following the last newline (the next line's indentation)."""
        text = self.text()
        idx = text.rfind("\n")
        return text[idx + 1:] if idx >= 0 else text


@dataclass(frozen=True)
class ConcreteTokenStream:
    leading: Trivia
    items: tuple[tuple[ConcreteToken, Trivia], ...]
    source_path: str = "<memory>"

    @property
    def tokens(self) -> list[ConcreteToken]:
        return [tok for tok, _ in self.items]

    def trivia_after(self, index: int) -> Trivia:
        return self.items[index][1]

    def __len__(self) -> int:
        return len(self.items)


def normalize_newlines(text: str) -> tuple[str, str]:
    """Normalize to LF; return (normalized_text, original_convention)."""
    if "\r\n" in text:
        return text.replace("\r\n", "\n").replace("\r", "\n"), "\r\n"
    if "\r" in text:
        return text.replace("\r", "\n"), "\n"
    return text, "\n"


def _is_ident_start(ch: str) -> bool:
    return ch in ("_", "$") or unicodedata.category(ch) in _IDENT_START_CATEGORIES


def _is_ident_part(ch: str) -> bool:
    return ch in ("_", "$") or unicodedata.category(ch) in _IDENT_PART_CATEGORIES


class _Scanner:
    def __init__(self, source: str, path: str):
        self.src = source
        self.path = path
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, reason: str, line: int | None = None, col: int | None = None):
        raise LexError(line if line is not None else self.line,
                       col if col is not None else self.col, reason)

    def peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.src[i] if i < len(self.src) else ""

    def take(self, n: int = 1) -> str:
        chunk = self.src[self.pos:self.pos + n]
        for ch in chunk:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
        self.pos += n
        return chunk

    def at_end(self) -> bool:
        return self.pos >= len(self.src)

    # -- trivia ---------------------------------------------------------

    def scan_trivia(self) -> Trivia:
        start = self.pos
        while not self.at_end() and self.peek() in " \t\n":
            self.take()
        return Trivia.from_text(self.src[start:self.pos])

    # -- token scanners -------------------------------------------------

    def scan_token(self) -> ConcreteToken:
        line, col = self.line, self.col
        ch = self.peek()

        if ch == "/" and self.peek(1) == "/":
            return self._finish(self._scan_line_comment(), TokenKind.LINE_COMMENT, line, col)
        if ch == "/" and self.peek(1) == "*":
            return self._finish(self._scan_block_comment(), TokenKind.BLOCK_COMMENT, line, col)
        if ch == '"':
            if self.peek(1) == '"' and self.peek(2) == '"':
                return self._finish(self._scan_text_block(), TokenKind.STRING_LITERAL, line, col)
            return self._finish(self._scan_string(), TokenKind.STRING_LITERAL, line, col)
        if ch == "'":
            return self._finish(self._scan_char(), TokenKind.CHAR_LITERAL, line, col)
        if ch.isdigit() or (ch == "." and self.peek(1).isdigit()):
            lexeme, kind = self._scan_number()
            return self._finish(lexeme, kind, line, col)
        if _is_ident_start(ch):
            word = self._scan_word()
            if word in KEYWORDS:
                kind = TokenKind.KEYWORD
            elif word in ("true", "false"):
                kind = TokenKind.BOOL_LITERAL
            elif word == "null":
                kind = TokenKind.NULL_LITERAL
            else:
                kind = TokenKind.IDENTIFIER
            return self._finish(word, kind, line, col)
        if ch in SEPARATORS:
            return self._finish(self.take(), TokenKind.SEPARATOR, line, col)
        for op in OPERATORS:
            if self.src.startswith(op, self.pos):
                return self._finish(self.take(len(op)), TokenKind.OPERATOR, line, col)
        if ch == "\r":
            self.error("carriage return in input; normalize newlines before lexing")
        self.error(f"illegal character {ch!r}")

    def _finish(self, lexeme: str, kind: TokenKind, line: int, col: int) -> ConcreteToken:
        return ConcreteToken(kind, lexeme, line, col)

    def _scan_line_comment(self) -> str:
        start = self.pos
        while not self.at_end() and self.peek() != "\n":
            self.take()
        return self.src[start:self.pos]

    def _scan_block_comment(self) -> str:
        line, col = self.line, self.col
        start = self.pos
        self.take(2)
        while not self.at_end():
            if self.peek() == "*" and self.peek(1) == "/":
                self.take(2)
                return self.src[start:self.pos]
            self.take()
        self.error("unterminated block comment", line, col)

    def _scan_string(self) -> str:
        line, col = self.line, self.col
        start = self.pos
        self.take()
        while not self.at_end():
            ch = self.peek()
            if ch == "\\":
                self.take(2)
                continue
            if ch == "\n":
                self.error("unterminated string literal", line, col)
            if ch == '"':
                self.take()
                return self.src[start:self.pos]
            self.take()
        self.error("unterminated string literal", line, col)

    def _scan_text_block(self) -> str:
        line, col = self.line, self.col
        start = self.pos
        self.take(3)
        while not self.at_end():
            if self.peek() == "\\":
                self.take(2)
                continue
            if self.peek() == '"' and self.peek(1) == '"' and self.peek(2) == '"':
                self.take(3)
                return self.src[start:self.pos]
            self.take()
        self.error("unterminated text block", line, col)

    def _scan_char(self) -> str:
        line, col = self.line, self.col
        start = self.pos
        self.take()
        while not self.at_end():
            ch = self.peek()
            if ch == "\\":
                self.take(2)
                continue
            if ch == "\n":
                self.error("unterminated char literal", line, col)
            if ch == "'":
                self.take()
                return self.src[start:self.pos]
            self.take()
        self.error("unterminated char literal", line, col)

    def _scan_word(self) -> str:
        start = self.pos
        self.take()
        while not self.at_end() and _is_ident_part(self.peek()):
            self.take()
        return self.src[start:self.pos]

    def _scan_number(self) -> tuple[str, TokenKind]:
        start = self.pos
        src = self.src

        def run(pred):
            while not self.at_end() and pred(self.peek()):
                self.take()

        if self.peek() == "0" and self.peek(1) in ("x", "X"):
            self.take(2)
            run(lambda c: c in "0123456789abcdefABCDEF_")
            if self.peek() in ("l", "L"):
                self.take()
            return src[start:self.pos], TokenKind.INT_LITERAL
        if self.peek() == "0" and self.peek(1) in ("b", "B"):
            self.take(2)
            run(lambda c: c in "01_")
            if self.peek() in ("l", "L"):
                self.take()
            return src[start:self.pos], TokenKind.INT_LITERAL

        is_float = False
        run(lambda c: c.isdigit() or c == "_")
        if self.peek() == "." and self.peek(1).isdigit():
            is_float = True
            self.take()
            run(lambda c: c.isdigit() or c == "_")
        elif self.peek() == "." and not _is_ident_start(self.peek(1)) and self.peek(1) != ".":
            # trailing-dot float such as "1." (not followed by ident/'..')
            is_float = True
            self.take()
        if self.peek() in ("e", "E") and (self.peek(1).isdigit() or
                                          (self.peek(1) in "+-" and self.peek(2).isdigit())):
            is_float = True
            self.take()
            if self.peek() in "+-":
                self.take()
            run(str.isdigit)
        if self.peek() in ("f", "F", "d", "D"):
            is_float = True
            self.take()
        elif self.peek() in ("l", "L"):
            self.take()
        kind = TokenKind.FLOAT_LITERAL if is_float else TokenKind.INT_LITERAL
        return src[start:self.pos], kind


def lex(source: str, path: str = "<memory>") -> ConcreteTokenStream:
    """Tokenize ``source`` losslessly. Raises LexError on malformed input."""
    scanner = _Scanner(source, path)
    leading = scanner.scan_trivia()
    items: list[tuple[ConcreteToken, Trivia]] = []
    while not scanner.at_end():
        token = scanner.scan_token()
        trivia = scanner.scan_trivia()
        items.append((token, trivia))
    return ConcreteTokenStream(leading, tuple(items), path)


def render(stream: ConcreteTokenStream) -> str:
    """Re-render a stream to text; identity for unmodified streams."""
    parts = [stream.leading.text()]
    for token, trivia in stream.items:
        parts.append(token.lexeme)
        parts.append(trivia.text())
    return "".join(parts)


def delimiters_balanced(stream: ConcreteTokenStream) -> bool:
    """Brace/paren/bracket balance; the lexer-level proxy for 'parseable'."""
    pairs = {")": "(", "]": "[", "}": "{"}
    stack: list[str] = []
    for token in stream.tokens:
        if token.kind is not TokenKind.SEPARATOR:
            continue
        if token.lexeme in "([{":
            stack.append(token.lexeme)
        elif token.lexeme in ")]}":
            if not stack or stack[-1] != pairs[token.lexeme]:
                return False
            stack.pop()
    return not stack


def token_offsets(stream: ConcreteTokenStream) -> list[tuple[int, int]]:
    """Byte (character) start/end offsets of each token in render order."""
    offsets = []
    pos = len(stream.leading.text())
    for token, trivia in stream.items:
        start = pos
        pos += len(token.lexeme)
        offsets.append((start, pos))
        pos += len(trivia.text())
    return offsets
