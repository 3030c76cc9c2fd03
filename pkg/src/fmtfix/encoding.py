"""Abstract token sequences over concrete token streams.

A source file becomes an alternating sequence of abstract code tokens
(keywords/separators/operators keep their text, everything else collapses
to a class name) and formatting tokens describing the whitespace between
them: ``n_SP``, ``n_TB``, ``n_NL`` or ``n_NL_<delta>_(ID|DD)`` where the
delta is the indentation change in characters between the two token lines.

The abstraction is lossy (identifiers lose their names, whitespace counts
are clamped to small vocabulary caps), so every sequence keeps a reference
to its concrete stream; decoding recovers the exact lexemes from there.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace

from .lexing import ConcreteTokenStream, TokenKind, Trivia, lex, token_offsets

SP_MAX = 10
TB_MAX = 4
NL_MAX = 3
DELTA_UNITS_MAX = 2

_CLASS_NAMES = {
    TokenKind.IDENTIFIER: "Identifier",
    TokenKind.INT_LITERAL: "IntLiteral",
    TokenKind.FLOAT_LITERAL: "FloatLiteral",
    TokenKind.STRING_LITERAL: "StringLiteral",
    TokenKind.CHAR_LITERAL: "CharLiteral",
    TokenKind.BOOL_LITERAL: "BoolLiteral",
    TokenKind.NULL_LITERAL: "NullLiteral",
    TokenKind.LINE_COMMENT: "Comment",
    TokenKind.BLOCK_COMMENT: "Comment",
    TokenKind.ANNOTATION: "Annotation",
}


class MixedIndentError(Exception):
    pass


class DecodeError(Exception):
    pass


class LocationError(Exception):
    pass


class AlignmentError(Exception):
    pass


def abstract_text(kind: TokenKind, lexeme: str) -> str:
    """Keywords, separators and operators map to themselves; the rest to a class name."""
    if kind in (TokenKind.KEYWORD, TokenKind.SEPARATOR, TokenKind.OPERATOR):
        return lexeme
    return _CLASS_NAMES[kind]


@dataclass(frozen=True, order=True)
class FormattingToken:
    """One whitespace gap: SP/TB with a count, or NL with a count and delta."""

    kind: str          # "SP" | "TB" | "NL"
    count: int
    delta: int = 0     # indentation change in characters; NL only

    def __post_init__(self):
        if self.kind == "SP":
            if not (0 <= self.count <= SP_MAX) or self.delta:
                raise ValueError(f"bad SP token ({self.count}, {self.delta})")
        elif self.kind == "TB":
            if not (1 <= self.count <= TB_MAX) or self.delta:
                raise ValueError(f"bad TB token ({self.count}, {self.delta})")
        elif self.kind == "NL":
            if not (1 <= self.count <= NL_MAX):
                raise ValueError(f"bad NL count {self.count}")
        else:
            raise ValueError(f"unknown formatting kind {self.kind!r}")

    @property
    def text(self) -> str:
        if self.kind == "NL" and self.delta:
            suffix = "ID" if self.delta > 0 else "DD"
            return f"{self.count}_NL_{abs(self.delta)}_{suffix}"
        return f"{self.count}_{self.kind}"

    def __str__(self):
        return self.text

    @classmethod
    def parse(cls, text: str) -> "FormattingToken":
        parts = text.split("_")
        try:
            if len(parts) == 2:
                return cls(parts[1], int(parts[0]))
            if len(parts) == 4 and parts[1] == "NL" and parts[3] in ("ID", "DD"):
                delta = int(parts[2])
                if delta <= 0:
                    raise ValueError
                return cls("NL", int(parts[0]), delta if parts[3] == "ID" else -delta)
        except ValueError:
            pass
        raise ValueError(f"not a formatting token: {text!r}")


SP0 = FormattingToken("SP", 0)


def formatting_vocabulary(indent_width: int = 4) -> list[FormattingToken]:
    """Every formatting token under the caps, for a given indent unit width."""
    tokens = [FormattingToken("SP", n) for n in range(SP_MAX + 1)]
    tokens += [FormattingToken("TB", n) for n in range(1, TB_MAX + 1)]
    for n in range(1, NL_MAX + 1):
        tokens.append(FormattingToken("NL", n))
        for units in range(1, DELTA_UNITS_MAX + 1):
            tokens.append(FormattingToken("NL", n, units * indent_width))
            tokens.append(FormattingToken("NL", n, -units * indent_width))
    return tokens


@dataclass(frozen=True)
class IndentUnit:
    char: str = " "   # " " or "\t"
    width: int = 4    # characters per indent step


@dataclass(frozen=True)
class AbstractSequence:
    """Alternating (code token, formatting token) pairs plus alignment.

    ``java[i]`` abstracts ``stream.tokens[i]``; ``fmt[i]`` is the gap that
    follows it (the last entry is the trailing trivia, 0_SP when absent).
    ``leading`` captures whitespace before the first token, if any.
    """

    java: tuple[str, ...]
    fmt: tuple[FormattingToken, ...]
    leading: FormattingToken | None
    stream: ConcreteTokenStream
    indent: IndentUnit
    warnings: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.java)

    def pair_texts(self) -> list[str]:
        out = []
        for j, f in zip(self.java, self.fmt):
            out.append(j)
            out.append(f.text)
        return out

    def to_text(self) -> str:
        parts = ([self.leading.text] if self.leading else []) + self.pair_texts()
        return " ".join(parts)

    def with_fmt(self, index: int, token: FormattingToken) -> "AbstractSequence":
        fmt = list(self.fmt)
        fmt[index] = token
        return replace(self, fmt=tuple(fmt))


def _clamp_delta(delta: int, width: int) -> int:
    if delta == 0 or width <= 0:
        return 0
    units = int(round(abs(delta) / width + 1e-9))
    units = max(1, min(units, DELTA_UNITS_MAX)) if abs(delta) * 2 >= width else 0
    return units * width * (1 if delta > 0 else -1)


def _collapse(trivia: Trivia, prev_indent: int, indent: IndentUnit,
              warnings: list[str], where: str) -> tuple[FormattingToken, int]:
    """Collapse one gap into a formatting token; returns (token, new line indent)."""
    if not trivia:
        return SP0, prev_indent
    if trivia.newlines == 0:
        chars: Counter[str] = Counter()
        for ch, n in trivia.runs:
            chars[ch] += n
        total = sum(chars.values())
        if len(chars) > 1:
            warnings.append(f"{where}: mixed spaces and tabs in one gap")
        major = chars.most_common(1)[0][0]
        if major == "\t":
            if total > TB_MAX:
                warnings.append(f"{where}: {total} tabs clamped to {TB_MAX}")
            return FormattingToken("TB", max(1, min(total, TB_MAX))), prev_indent
        if total > SP_MAX:
            warnings.append(f"{where}: {total} spaces clamped to {SP_MAX}")
        return FormattingToken("SP", min(total, SP_MAX)), prev_indent
    count = min(trivia.newlines, NL_MAX)
    if trivia.newlines > NL_MAX:
        warnings.append(f"{where}: {trivia.newlines} newlines clamped to {NL_MAX}")
    tail = trivia.after_last_newline()
    if any(ch != indent.char for ch in tail):
        warnings.append(f"{where}: indentation does not use the indent character")
    new_indent = len(tail)
    delta = _clamp_delta(new_indent - prev_indent, indent.width)
    if delta != new_indent - prev_indent:
        warnings.append(f"{where}: indentation delta {new_indent - prev_indent} "
                        f"quantized to {delta}")
    return FormattingToken("NL", count, delta), new_indent


def detect_indent_unit(corpus: list[ConcreteTokenStream]) -> IndentUnit:
    """Majority indent character and modal positive indentation step."""
    char_votes: Counter[str] = Counter()
    deltas: Counter[int] = Counter()
    for stream in corpus:
        gaps = [stream.leading] if stream.leading.newlines else []
        for _, trivia in stream.items:
            gaps.append(trivia)
        prev = 0
        for trivia in gaps:
            if trivia.newlines == 0:
                continue
            tail = trivia.after_last_newline()
            if tail:
                char_votes[tail[0]] += 1
            width = len(tail)
            if width > prev:
                deltas[width - prev] += 1
            prev = width
    if not char_votes:
        return IndentUnit(" ", 4)
    char = char_votes.most_common(1)[0][0]
    if char == "\t":
        return IndentUnit("\t", 1)
    if not deltas:
        return IndentUnit(char, 4)
    width = deltas.most_common(1)[0][0]
    return IndentUnit(char, width)


def encode(stream: ConcreteTokenStream, indent: IndentUnit | None = None) -> AbstractSequence:
    """Translate a concrete stream into an abstract sequence."""
    if indent is None:
        indent = detect_indent_unit([stream])
    warnings: list[str] = []
    java = tuple(abstract_text(tok.kind, tok.lexeme) for tok in stream.tokens)

    leading = None
    cur_indent = 0
    if stream.leading:
        leading, cur_indent = _collapse(stream.leading, 0, indent, warnings, "leading")
        if leading.kind != "NL":
            cur_indent = sum(n for _, n in stream.leading.runs)

    fmt: list[FormattingToken] = []
    last = len(stream.items) - 1
    for i, (_, trivia) in enumerate(stream.items):
        if i == last and trivia.newlines:
            # the EOF gap carries no indentation semantics
            count = min(trivia.newlines, NL_MAX)
            if trivia.newlines > NL_MAX:
                warnings.append(f"after token {i}: {trivia.newlines} newlines "
                                f"clamped to {NL_MAX}")
            if trivia.after_last_newline():
                warnings.append(f"after token {i}: whitespace after the final "
                                "newline is dropped")
            fmt.append(FormattingToken("NL", count))
        else:
            token, cur_indent = _collapse(trivia, cur_indent, indent, warnings,
                                          f"after token {i}")
            fmt.append(token)
    return AbstractSequence(java, tuple(fmt), leading, stream, indent, tuple(warnings))


def _materialize(token: FormattingToken, cur_indent: int, indent: IndentUnit,
                 warnings: list[str]) -> tuple[str, int]:
    if token.kind == "SP":
        return " " * token.count, cur_indent
    if token.kind == "TB":
        return "\t" * token.count, cur_indent
    new_indent = cur_indent + token.delta
    if new_indent < 0:
        warnings.append(f"negative indentation {new_indent} clamped to 0")
        new_indent = 0
    return "\n" * token.count + indent.char * new_indent, new_indent


def decode(seq: AbstractSequence,
           new_formatting: list[FormattingToken] | None = None) -> str:
    """Render a sequence back to text, optionally with replaced formatting.

    Unchanged formatting reproduces the original text for any stream that
    encode() handled without warnings.
    """
    fmt = tuple(new_formatting) if new_formatting is not None else seq.fmt
    if len(fmt) != len(seq.fmt):
        raise DecodeError(f"expected {len(seq.fmt)} formatting tokens, got {len(fmt)}")
    warnings: list[str] = []
    parts: list[str] = []
    cur_indent = 0
    if seq.leading is not None:
        text, cur_indent = _materialize(seq.leading, 0, seq.indent, warnings)
        if seq.leading.kind != "NL":
            cur_indent = len(text)
        parts.append(text)
    last = len(fmt) - 1
    for i, (token, f) in enumerate(zip(seq.stream.tokens, fmt)):
        parts.append(token.lexeme)
        if i == last and f.kind == "NL":
            parts.append("\n" * f.count)
        else:
            text, cur_indent = _materialize(f, cur_indent, seq.indent, warnings)
            parts.append(text)
    return "".join(parts)


def splice(seq: AbstractSequence, first: int, last: int,
           fmts: list[FormattingToken]) -> str:
    """Re-render only the formatting of pairs ``first..last`` (inclusive).

    Bytes outside the affected gap region are copied verbatim from the
    original stream, so a prediction can never disturb untouched code.
    The delta of the first newline token is applied relative to the
    indentation of the line the window's first code token starts on.
    """
    if len(fmts) != last - first + 1:
        raise DecodeError("formatting count does not match pair range")
    stream = seq.stream
    from .lexing import render
    original = render(stream)
    offsets = token_offsets(stream)
    prefix = original[:offsets[first][1]]
    suffix = original[offsets[last + 1][0]:] if last + 1 < len(stream) else ""

    first_line = original.split("\n")[stream.tokens[first].line - 1]
    cur_indent = len(first_line) - len(first_line.lstrip(" \t"))
    warnings: list[str] = []
    middle: list[str] = []
    for k, f in enumerate(fmts):
        if first + k == len(stream) - 1 and f.kind == "NL":
            middle.append("\n" * f.count)  # EOF gap: newlines only
        else:
            text, cur_indent = _materialize(f, cur_indent, seq.indent, warnings)
            middle.append(text)
        token_index = first + k + 1
        if token_index <= last:
            middle.append(stream.tokens[token_index].lexeme)
    return prefix + "".join(middle) + suffix


@dataclass(frozen=True)
class WindowParams:
    context_lines: int = 5      # lines of context before/after the error line
    tag_tokens: int = 10        # tokens each side of a column-located error
    line_tokens_before: int = 2  # tokens before the line, line-only errors
    line_tokens_after: int = 13  # tokens after end of line, line-only errors

    def __post_init__(self):
        for name in ("context_lines", "tag_tokens", "line_tokens_before", "line_tokens_after"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class ErrorWindow:
    """Tagged sub-sequence around one violation: the model input."""

    seq: AbstractSequence   # full-file sequence
    rule: str
    start: int              # first pair index in the window
    end: int                # last pair index (inclusive)
    tag_open: int           # <Rule> sits before this pair
    tag_close: int          # </Rule> sits after this pair

    @property
    def size(self) -> int:
        """Number of (code, formatting) pairs — the formatting positions."""
        return self.end - self.start + 1

    def input_tokens(self) -> list[str]:
        """Window token texts with rule tags inserted (never splitting a pair)."""
        out: list[str] = []
        for i in range(self.start, self.end + 1):
            if i == self.tag_open:
                out.append(f"<{self.rule}>")
            out.append(self.seq.java[i])
            out.append(self.seq.fmt[i].text)
            if i == self.tag_close:
                out.append(f"</{self.rule}>")
        return out

    def input_text(self) -> str:
        return " ".join(self.input_tokens())

    def window_fmt(self) -> list[FormattingToken]:
        return list(self.seq.fmt[self.start:self.end + 1])


def _token_index_at(seq: AbstractSequence, line: int, column: int | None) -> int:
    tokens = seq.stream.tokens
    on_line = [i for i, t in enumerate(tokens) if t.line == line]
    if not on_line:
        raise LocationError(f"no tokens on line {line}")
    if column is None:
        return on_line[0]
    for i in on_line:
        t = tokens[i]
        if t.column <= column < t.column + len(t.lexeme):
            return i
    return min(on_line, key=lambda i: abs(tokens[i].column - column))


def extract_error_window(seq: AbstractSequence, violation, params: WindowParams) -> ErrorWindow:
    """Cut the context window around a violation and place the rule tags."""
    tokens = seq.stream.tokens
    if not tokens:
        raise LocationError("empty file")
    line = violation.line
    lines_with_tokens = [t.line for t in tokens]
    if line < 1 or line > max(lines_with_tokens):
        raise LocationError(f"line {line} outside the file")

    lo_line = line - params.context_lines
    hi_line = line + params.context_lines
    start = next((i for i, t in enumerate(tokens) if t.line >= lo_line), 0)
    end = len(tokens) - 1
    for i in range(len(tokens) - 1, -1, -1):
        if tokens[i].line <= hi_line:
            end = i
            break

    if violation.column is not None:
        anchor = _token_index_at(seq, line, violation.column)
        tag_open = anchor - params.tag_tokens
        tag_close = anchor + params.tag_tokens
    else:
        on_line = [i for i, t in enumerate(tokens) if t.line == line]
        if not on_line:
            # line-only violation on a blank/structural line: anchor on the window
            tag_open, tag_close = start, end
        else:
            tag_open = on_line[0] - params.line_tokens_before
            tag_close = on_line[-1] + params.line_tokens_after
    tag_open = max(tag_open, start)
    tag_close = min(tag_close, end)
    return ErrorWindow(seq, violation.rule, start, end, tag_open, tag_close)


def align_target_window(orig_seq: AbstractSequence, window: ErrorWindow) -> list[FormattingToken]:
    """Ground-truth formatting for a window: the clean file's tokens at the same pairs."""
    if orig_seq.java != window.seq.java:
        raise AlignmentError("code token sequences differ between clean and errored file")
    return list(orig_seq.fmt[window.start:window.end + 1])
