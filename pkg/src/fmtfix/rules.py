"""Token-level implementations of the supported formatting rules.

Each checker is a function ``(ctx, props) -> iterable[(line, column, message)]``
where ``column`` is None for line-level rules. The semantics approximate the
upstream Java checks at the lexical level:

- no syntax tree exists, so block detection, cast detection, generics and
  annotation argument lists use token heuristics;
- ``Indentation`` is a plain brace-depth model (every token line must sit at
  ``depth * basicOffset``);
- annotation argument ``=`` and primitive-cast parentheses are exempt from
  WhitespaceAround / ParenPad, mirroring the upstream default token sets.

Columns are 1-based character offsets with a tab counting as one column.
"""

from __future__ import annotations

import re
from functools import cached_property

from .lexing import ConcreteTokenStream, TokenKind

PRIMITIVES = frozenset(["int", "long", "short", "byte", "char",
                        "float", "double", "boolean"])

_OPERAND_END_KINDS = frozenset([
    TokenKind.IDENTIFIER, TokenKind.INT_LITERAL, TokenKind.FLOAT_LITERAL,
    TokenKind.STRING_LITERAL, TokenKind.CHAR_LITERAL, TokenKind.BOOL_LITERAL,
    TokenKind.NULL_LITERAL,
])

_ALWAYS_SPACED_OPS = frozenset([
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>=",
    "==", "!=", "&&", "||",
])
_ARITH_OPS = frozenset(["+", "-", "*", "/", "%"])
_WRAP_OPS = frozenset(["+", "-", "*", "/", "%", "==", "!=", "&&", "||"])

# '{' directly after one of these opens an initializer, not a block
_NON_BLOCK_BRACE_PREDECESSORS = frozenset(["=", ",", "(", "[", "{", "]", "->"])


class ConfigError(Exception):
    pass


class CheckContext:
    """One checked file: raw lines, token stream, and derived token facts."""

    def __init__(self, source: str, stream: ConcreteTokenStream, path: str):
        self.source = source
        self.lines = source.split("\n")
        self.stream = stream
        self.tokens = stream.tokens
        self.path = path

    def gap_before(self, i: int):
        return self.stream.leading if i == 0 else self.stream.items[i - 1][1]

    def gap_after(self, i: int):
        return self.stream.items[i][1]

    def is_operand_end(self, i: int) -> bool:
        tok = self.tokens[i]
        return tok.kind in _OPERAND_END_KINDS or tok.lexeme in (")", "]")

    def is_binary(self, i: int) -> bool:
        return i > 0 and self.is_operand_end(i - 1)

    def is_block_open(self, i: int) -> bool:
        if self.tokens[i].lexeme != "{":
            return False
        if i == 0:
            return True
        return self.tokens[i - 1].lexeme not in _NON_BLOCK_BRACE_PREDECESSORS

    @cached_property
    def paren_match(self) -> dict[int, int]:
        match: dict[int, int] = {}
        stack: list[int] = []
        for i, tok in enumerate(self.tokens):
            if tok.kind is not TokenKind.SEPARATOR:
                continue
            if tok.lexeme == "(":
                stack.append(i)
            elif tok.lexeme == ")" and stack:
                match[stack.pop()] = i
        return match

    @cached_property
    def cast_parens(self) -> set[int]:
        """Indices of '(' and ')' forming a primitive typecast like (int)."""
        out: set[int] = set()
        toks = self.tokens
        for i in range(len(toks) - 2):
            if (toks[i].lexeme == "(" and toks[i + 2].lexeme == ")"
                    and toks[i + 1].kind is TokenKind.KEYWORD
                    and toks[i + 1].lexeme in PRIMITIVES):
                out.update((i, i + 2))
        return out

    @cached_property
    def cast_close_parens(self) -> set[int]:
        toks = self.tokens
        return {i for i in self.cast_parens
                if toks[i].lexeme == ")"}

    @cached_property
    def annotation_spans(self) -> list[tuple[int, int]]:
        """(open, close) paren index pairs of annotation argument lists."""
        spans = []
        toks = self.tokens
        for i, tok in enumerate(toks):
            if tok.lexeme != "@" or i + 1 >= len(toks):
                continue
            j = i + 1
            if toks[j].kind is not TokenKind.IDENTIFIER:
                continue
            while (j + 2 < len(toks) and toks[j + 1].lexeme == "."
                   and toks[j + 2].kind is TokenKind.IDENTIFIER):
                j += 2
            if j + 1 < len(toks) and toks[j + 1].lexeme == "(":
                close = self.paren_match.get(j + 1)
                if close is not None:
                    spans.append((j + 1, close))
        return spans

    @cached_property
    def annotation_paren_indices(self) -> set[int]:
        return {i for span in self.annotation_spans for i in span}

    @cached_property
    def annotation_arg_indices(self) -> set[int]:
        out: set[int] = set()
        for open_idx, close_idx in self.annotation_spans:
            out.update(range(open_idx + 1, close_idx))
        return out

    @cached_property
    def for_statements(self) -> list[tuple[int, int, list[int]]]:
        """(open paren, close paren, top-level semicolon indices) per for."""
        out = []
        toks = self.tokens
        for i, tok in enumerate(toks):
            if tok.kind is not TokenKind.KEYWORD or tok.lexeme != "for":
                continue
            if i + 1 >= len(toks) or toks[i + 1].lexeme != "(":
                continue
            open_idx = i + 1
            close_idx = self.paren_match.get(open_idx)
            if close_idx is None:
                continue
            depth = 0
            semis = []
            for k in range(open_idx, close_idx + 1):
                lex = toks[k].lexeme
                if toks[k].kind is TokenKind.SEPARATOR:
                    if lex == "(":
                        depth += 1
                    elif lex == ")":
                        depth -= 1
                    elif lex == ";" and depth == 1:
                        semis.append(k)
            out.append((open_idx, close_idx, semis))
        return out

    @cached_property
    def for_semi_indices(self) -> set[int]:
        return {s for _, _, semis in self.for_statements for s in semis}

    @cached_property
    def generic_angles(self) -> tuple[set[int], set[int]]:
        """(open '<' indices, close '>' indices) of detected generic regions."""
        toks = self.tokens
        opens: set[int] = set()
        closes: set[int] = set()
        allowed_keywords = PRIMITIVES | {"extends", "super"}
        allowed_lexemes = {",", ".", "[", "]", "?", "&"}
        i = 0
        while i < len(toks):
            tok = toks[i]
            if (tok.lexeme == "<" and i > 0
                    and toks[i - 1].kind is TokenKind.IDENTIFIER):
                depth = 1
                region_open = [i]
                region_close = []
                j = i + 1
                ok = False
                while j < len(toks) and j - i <= 64:
                    t = toks[j]
                    if t.lexeme == "<":
                        depth += 1
                        region_open.append(j)
                    elif t.lexeme == ">":
                        depth -= 1
                        region_close.append(j)
                        if depth == 0:
                            ok = True
                            break
                    elif t.kind is TokenKind.IDENTIFIER:
                        pass
                    elif t.kind is TokenKind.KEYWORD and t.lexeme in allowed_keywords:
                        pass
                    elif t.lexeme in allowed_lexemes:
                        pass
                    else:
                        break
                    j += 1
                if ok:
                    opens.update(region_open)
                    closes.update(region_close)
                    i = j
            i += 1
        return opens, closes


# ---------------------------------------------------------------------------
# property parsing

def _enum(*values, default):
    def parse(raw):
        if raw not in values:
            raise ConfigError(f"expected one of {values}, got {raw!r}")
        return raw
    return parse, default


def _positive_int(default):
    def parse(raw):
        try:
            value = int(raw)
        except ValueError as exc:
            raise ConfigError(f"expected an integer, got {raw!r}") from exc
        if value <= 0:
            raise ConfigError(f"expected a positive integer, got {value}")
        return value
    return parse, default


def _boolean(default):
    def parse(raw):
        if raw not in ("true", "false"):
            raise ConfigError(f"expected true/false, got {raw!r}")
        return raw == "true"
    return parse, default


def _regex(default):
    def parse(raw):
        try:
            re.compile(raw)
        except re.error as exc:
            raise ConfigError(f"bad regular expression {raw!r}: {exc}") from exc
        return raw
    return parse, default


def _token_set(allowed, default):
    def parse(raw):
        names = [t for t in re.split(r"[,\s]+", raw.strip()) if t]
        for name in names:
            if name not in allowed:
                raise ConfigError(f"unsupported token {name!r} (allowed: {sorted(allowed)})")
        return frozenset(names)
    return parse, frozenset(default)


_PROPERTY_SPECS: dict[str, dict[str, tuple]] = {
    "LeftCurly": {"option": _enum("eol", "nl", default="eol")},
    "RightCurly": {"option": _enum("same", "alone", default="same")},
    "WhitespaceAround": {},
    "WhitespaceAfter": {
        "tokens": _token_set({"COMMA", "SEMI", "TYPECAST"},
                             default={"COMMA", "SEMI", "TYPECAST"})},
    "NoWhitespaceBefore": {
        "allowLineBreaks": _boolean(False),
        "tokens": _token_set({"COMMA", "SEMI", "POST_INC", "POST_DEC"},
                             default={"COMMA", "SEMI", "POST_INC", "POST_DEC"})},
    "NoWhitespaceAfter": {
        "allowLineBreaks": _boolean(True),
        "tokens": _token_set(
            {"DOT", "AT", "INC", "DEC", "LNOT", "BNOT",
             "UNARY_MINUS", "UNARY_PLUS", "ARRAY_DECLARATOR"},
            default={"DOT", "AT", "INC", "DEC", "LNOT", "BNOT",
                     "UNARY_MINUS", "UNARY_PLUS", "ARRAY_DECLARATOR"})},
    "LineLength": {"max": _positive_int(80)},
    "FileTabCharacter": {"eachLine": _boolean(False)},
    "NewlineAtEndOfFile": {},
    "ParenPad": {"option": _enum("nospace", "space", default="nospace")},
    "MethodParamPad": {"option": _enum("nospace", "space", default="nospace"),
                       "allowLineBreaks": _boolean(False)},
    "EmptyForIteratorPad": {"option": _enum("nospace", "space", default="nospace")},
    "GenericWhitespace": {},
    "OperatorWrap": {"option": _enum("nl", "eol", default="nl")},
    "SeparatorWrap": {"option": _enum("nl", "eol", default="eol"),
                      "tokens": _token_set({"DOT", "COMMA", "SEMI"},
                                           default={"DOT", "COMMA"})},
    "OneStatementPerLine": {},
    "Indentation": {"basicOffset": _positive_int(4)},
    "RegexpSingleline": {"format": _regex(r"\s+$")},
}

SUPPORTED_RULES = frozenset(_PROPERTY_SPECS)

_IGNORED_PROPERTIES = frozenset(["severity", "id", "fileExtensions"])


def validate_properties(name: str, props: dict[str, str]) -> dict:
    spec = _PROPERTY_SPECS[name]
    out: dict = {}
    for pname, raw in props.items():
        if pname in _IGNORED_PROPERTIES:
            continue
        if pname not in spec:
            raise ConfigError(f"unknown property {pname!r} for rule {name}")
        parse, _ = spec[pname]
        out[pname] = parse(raw)
    for pname, (_, default) in spec.items():
        out.setdefault(pname, default)
    return out


# ---------------------------------------------------------------------------
# rule checkers

def _pos(tok):
    return tok.line, tok.column


def check_left_curly(ctx: CheckContext, props):
    option = props["option"]
    for i, tok in enumerate(ctx.tokens):
        if tok.lexeme != "{" or not ctx.is_block_open(i) or i == 0:
            continue
        has_newline = ctx.gap_before(i).newlines > 0
        if option == "nl" and not has_newline:
            yield tok.line, tok.column, \
                f"'{{' at column {tok.column} should be on a new line."
        elif option == "eol" and has_newline:
            yield tok.line, tok.column, \
                f"'{{' at column {tok.column} should be on the previous line."


def check_right_curly(ctx: CheckContext, props):
    option = props["option"]
    toks = ctx.tokens
    for i, tok in enumerate(toks):
        if tok.lexeme != "}" or i + 1 >= len(toks):
            continue
        nxt = toks[i + 1]
        if nxt.kind is not TokenKind.KEYWORD or \
                nxt.lexeme not in ("else", "catch", "finally", "while"):
            continue
        has_newline = ctx.gap_after(i).newlines > 0
        if option == "same" and has_newline:
            yield tok.line, tok.column, \
                f"'}}' at column {tok.column} should be on the same line " \
                "as the next part of a multi-block statement."
        elif option == "alone" and not has_newline:
            yield tok.line, tok.column, \
                f"'}}' at column {tok.column} should be alone on a line."


def check_whitespace_around(ctx: CheckContext, props):
    toks = ctx.tokens
    last = len(toks) - 1
    for i, tok in enumerate(toks):
        lex = tok.lexeme
        if tok.kind is TokenKind.OPERATOR:
            if lex in _ALWAYS_SPACED_OPS:
                if lex == "=" and i in ctx.annotation_arg_indices:
                    continue
            elif lex in _ARITH_OPS:
                if not ctx.is_binary(i):
                    continue
            else:
                continue
            if i > 0 and not ctx.gap_before(i):
                yield tok.line, tok.column, f"'{lex}' is not preceded with whitespace."
            if i < last and not ctx.gap_after(i):
                yield tok.line, tok.column, f"'{lex}' is not followed by whitespace."
        elif lex == "{" and ctx.is_block_open(i):
            if i > 0 and not ctx.gap_before(i):
                yield tok.line, tok.column, "'{' is not preceded with whitespace."
        elif tok.kind is TokenKind.KEYWORD and \
                lex in ("else", "catch", "finally", "while", "do", "try"):
            if i > 0 and toks[i - 1].lexeme == "}" and not ctx.gap_before(i):
                yield tok.line, tok.column, f"'{lex}' is not preceded with whitespace."


def check_whitespace_after(ctx: CheckContext, props):
    wanted = props["tokens"]
    toks = ctx.tokens
    last = len(toks) - 1
    for i, tok in enumerate(toks):
        if i >= last:
            break
        lex = tok.lexeme
        if lex == "," and "COMMA" in wanted:
            if not ctx.gap_after(i):
                yield tok.line, tok.column, "',' is not followed by whitespace."
        elif lex == ";" and "SEMI" in wanted:
            if toks[i + 1].lexeme in (";", ")"):
                continue
            if not ctx.gap_after(i):
                yield tok.line, tok.column, "';' is not followed by whitespace."
        elif "TYPECAST" in wanted and i in ctx.cast_close_parens:
            if not ctx.gap_after(i):
                yield tok.line, tok.column, "'cast' is not followed by whitespace."


def check_no_whitespace_before(ctx: CheckContext, props):
    wanted = props["tokens"]
    allow_breaks = props["allowLineBreaks"]
    toks = ctx.tokens
    for i, tok in enumerate(toks):
        if i == 0:
            continue
        lex = tok.lexeme
        if lex == "," and "COMMA" in wanted:
            pass
        elif lex == ";" and "SEMI" in wanted:
            pass
        elif lex in ("++", "--") and ctx.is_binary(i) and \
                ("POST_INC" if lex == "++" else "POST_DEC") in wanted:
            pass
        else:
            continue
        gap = ctx.gap_before(i)
        if gap and not (allow_breaks and gap.newlines > 0):
            yield tok.line, tok.column, f"'{lex}' is preceded with whitespace."


def check_no_whitespace_after(ctx: CheckContext, props):
    wanted = props["tokens"]
    allow_breaks = props["allowLineBreaks"]
    toks = ctx.tokens
    last = len(toks) - 1

    def flagged_gap(i):
        gap = ctx.gap_after(i)
        return gap and not (allow_breaks and gap.newlines > 0)

    for i, tok in enumerate(toks):
        if i >= last:
            break
        lex = tok.lexeme
        name = None
        if lex == "." and "DOT" in wanted and tok.kind is TokenKind.SEPARATOR:
            name = lex
        elif lex == "@" and "AT" in wanted:
            name = lex
        elif lex in ("++", "--") and not ctx.is_binary(i) and \
                ("INC" if lex == "++" else "DEC") in wanted:
            name = lex
        elif lex == "!" and "LNOT" in wanted:
            name = lex
        elif lex == "~" and "BNOT" in wanted:
            name = lex
        elif lex in ("-", "+") and not ctx.is_binary(i) and \
                tok.kind is TokenKind.OPERATOR and \
                ("UNARY_MINUS" if lex == "-" else "UNARY_PLUS") in wanted:
            name = lex
        if name is not None and flagged_gap(i):
            yield tok.line, tok.column, f"'{name}' is followed by whitespace."

    if "ARRAY_DECLARATOR" in wanted:
        for i in range(1, len(toks) - 1):
            if toks[i].lexeme != "[" or toks[i + 1].lexeme != "]":
                continue
            prev = toks[i - 1]
            if prev.kind is TokenKind.IDENTIFIER or \
                    (prev.kind is TokenKind.KEYWORD and prev.lexeme in PRIMITIVES) or \
                    prev.lexeme in (">", "]"):
                gap = ctx.gap_before(i)
                if gap and not (allow_breaks and gap.newlines > 0):
                    yield toks[i].line, toks[i].column, \
                        f"'{prev.lexeme}' is followed by whitespace."


def check_line_length(ctx: CheckContext, props):
    limit = props["max"]
    for lineno, line in enumerate(ctx.lines, 1):
        if len(line) > limit:
            yield lineno, None, f"Line is longer than {limit} characters."


def check_file_tab_character(ctx: CheckContext, props):
    each_line = props["eachLine"]
    for lineno, line in enumerate(ctx.lines, 1):
        col = line.find("\t")
        if col < 0:
            continue
        if each_line:
            yield lineno, col + 1, "Line contains a tab character."
        else:
            yield lineno, col + 1, \
                "File contains tab characters (this is the first instance)."
            return


def check_newline_at_end_of_file(ctx: CheckContext, props):
    if ctx.source and not ctx.source.endswith("\n"):
        yield 1, None, "File does not end with a newline."


def check_paren_pad(ctx: CheckContext, props):
    option = props["option"]
    toks = ctx.tokens
    last = len(toks) - 1
    exempt = ctx.cast_parens | ctx.annotation_paren_indices
    for i, tok in enumerate(toks):
        if tok.kind is not TokenKind.SEPARATOR or i in exempt:
            continue
        if tok.lexeme == "(" and i < last:
            gap = ctx.gap_after(i)
            if option == "nospace":
                if gap and gap.newlines == 0:
                    yield tok.line, tok.column, "'(' is followed by whitespace."
            else:
                if not gap and toks[i + 1].lexeme != ")":
                    yield tok.line, tok.column, "'(' is not followed by whitespace."
        elif tok.lexeme == ")" and i > 0:
            gap = ctx.gap_before(i)
            if option == "nospace":
                if gap and gap.newlines == 0:
                    yield tok.line, tok.column, "')' is preceded with whitespace."
            else:
                if not gap and toks[i - 1].lexeme != "(":
                    yield tok.line, tok.column, "')' is not preceded with whitespace."


def check_method_param_pad(ctx: CheckContext, props):
    option = props["option"]
    allow_breaks = props["allowLineBreaks"]
    toks = ctx.tokens
    for i, tok in enumerate(toks):
        if tok.lexeme != "(" or i == 0:
            continue
        if toks[i - 1].kind is not TokenKind.IDENTIFIER:
            continue
        gap = ctx.gap_before(i)
        if gap.newlines > 0:
            if not allow_breaks:
                yield tok.line, tok.column, "'(' should be on the previous line."
        elif option == "nospace" and gap:
            yield tok.line, tok.column, "'(' is preceded with whitespace."
        elif option == "space" and not gap:
            yield tok.line, tok.column, "'(' is not preceded with whitespace."


def check_empty_for_iterator_pad(ctx: CheckContext, props):
    option = props["option"]
    toks = ctx.tokens
    for _, close_idx, semis in ctx.for_statements:
        if len(semis) < 2:
            continue
        semi = semis[-1]
        if semi + 1 != close_idx:
            continue  # iterator section is not empty
        tok = toks[semi]
        gap = ctx.gap_after(semi)
        if gap.newlines > 0:
            continue
        if option == "nospace" and gap:
            yield tok.line, tok.column, "';' is followed by whitespace."
        elif option == "space" and not gap:
            yield tok.line, tok.column, "';' is not followed by whitespace."


def check_generic_whitespace(ctx: CheckContext, props):
    opens, closes = ctx.generic_angles
    toks = ctx.tokens
    for i in sorted(opens):
        tok = toks[i]
        before = ctx.gap_before(i)
        if before and before.newlines == 0:
            yield tok.line, tok.column, "'<' is preceded with whitespace."
        after = ctx.gap_after(i)
        if after and after.newlines == 0:
            yield tok.line, tok.column, "'<' is followed by whitespace."
    for i in sorted(closes):
        tok = toks[i]
        before = ctx.gap_before(i)
        if before and before.newlines == 0:
            yield tok.line, tok.column, "'>' is preceded with whitespace."


def check_operator_wrap(ctx: CheckContext, props):
    option = props["option"]
    toks = ctx.tokens
    last = len(toks) - 1
    for i, tok in enumerate(toks):
        lex = tok.lexeme
        if tok.kind is TokenKind.OPERATOR:
            if lex not in _WRAP_OPS:
                continue
            if lex in _ARITH_OPS and not ctx.is_binary(i):
                continue
        elif not (tok.kind is TokenKind.KEYWORD and lex == "instanceof"):
            continue
        before_nl = i > 0 and ctx.gap_before(i).newlines > 0
        after_nl = i < last and ctx.gap_after(i).newlines > 0
        if option == "nl" and after_nl and not before_nl:
            yield tok.line, tok.column, f"'{lex}' should be on a new line."
        elif option == "eol" and before_nl:
            yield tok.line, tok.column, f"'{lex}' should be on the previous line."


_SEPARATOR_TOKEN_MAP = {"DOT": ".", "COMMA": ",", "SEMI": ";"}


def check_separator_wrap(ctx: CheckContext, props):
    option = props["option"]
    lexemes = {_SEPARATOR_TOKEN_MAP[t] for t in props["tokens"]}
    toks = ctx.tokens
    last = len(toks) - 1
    for i, tok in enumerate(toks):
        if tok.kind is not TokenKind.SEPARATOR or tok.lexeme not in lexemes:
            continue
        before_nl = i > 0 and ctx.gap_before(i).newlines > 0
        after_nl = i < last and ctx.gap_after(i).newlines > 0
        if option == "nl" and after_nl and not before_nl:
            yield tok.line, tok.column, f"'{tok.lexeme}' should be on a new line."
        elif option == "eol" and before_nl:
            yield tok.line, tok.column, f"'{tok.lexeme}' should be on the previous line."


def check_one_statement_per_line(ctx: CheckContext, props):
    for_semis = ctx.for_semi_indices
    lines_seen: set[int] = set()
    for i, tok in enumerate(ctx.tokens):
        if tok.lexeme != ";" or tok.kind is not TokenKind.SEPARATOR:
            continue
        if i in for_semis:
            continue
        if tok.line in lines_seen:
            yield tok.line, tok.column, "Only one statement per line allowed."
        lines_seen.add(tok.line)


def check_indentation(ctx: CheckContext, props):
    offset = props["basicOffset"]
    expected_by_line: dict[int, int] = {}
    depth = 0
    for tok in ctx.tokens:
        if tok.line not in expected_by_line:
            line_depth = depth - 1 if tok.lexeme == "}" else depth
            expected_by_line[tok.line] = max(line_depth, 0) * offset
        if tok.lexeme == "{":
            depth += 1
        elif tok.lexeme == "}":
            depth = max(depth - 1, 0)
    for lineno in sorted(expected_by_line):
        text = ctx.lines[lineno - 1]
        actual = len(text) - len(text.lstrip(" \t"))
        expected = expected_by_line[lineno]
        if actual != expected:
            yield lineno, None, \
                f"Line has incorrect indentation level {actual}, " \
                f"expected level should be {expected}."


def check_regexp_singleline(ctx: CheckContext, props):
    pattern = re.compile(props["format"])
    for lineno, line in enumerate(ctx.lines, 1):
        if pattern.search(line):
            yield lineno, None, f"Line matches the illegal pattern '{props['format']}'."


RULE_CHECKERS = {
    "LeftCurly": check_left_curly,
    "RightCurly": check_right_curly,
    "WhitespaceAround": check_whitespace_around,
    "WhitespaceAfter": check_whitespace_after,
    "NoWhitespaceBefore": check_no_whitespace_before,
    "NoWhitespaceAfter": check_no_whitespace_after,
    "LineLength": check_line_length,
    "FileTabCharacter": check_file_tab_character,
    "NewlineAtEndOfFile": check_newline_at_end_of_file,
    "ParenPad": check_paren_pad,
    "MethodParamPad": check_method_param_pad,
    "EmptyForIteratorPad": check_empty_for_iterator_pad,
    "GenericWhitespace": check_generic_whitespace,
    "OperatorWrap": check_operator_wrap,
    "SeparatorWrap": check_separator_wrap,
    "OneStatementPerLine": check_one_statement_per_line,
    "Indentation": check_indentation,
    "RegexpSingleline": check_regexp_singleline,
}

assert set(RULE_CHECKERS) == SUPPORTED_RULES
