import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fmtfix.checker import Violation
from fmtfix.encoding import (AlignmentError, DecodeError, FormattingToken,
                             IndentUnit, LocationError, WindowParams,
                             decode, detect_indent_unit, encode,
                             extract_error_window, formatting_vocabulary,
                             splice, align_target_window)
from fmtfix.lexing import lex, render

from conftest import fixture_corpus_paths


def seq_of(src, indent=None):
    return encode(lex(src), indent)


# -- formatting token grammar ------------------------------------------------

@pytest.mark.parametrize("text,kind,count,delta", [
    ("0_SP", "SP", 0, 0),
    ("4_SP", "SP", 4, 0),
    ("10_SP", "SP", 10, 0),
    ("1_TB", "TB", 1, 0),
    ("4_TB", "TB", 4, 0),
    ("1_NL", "NL", 1, 0),
    ("3_NL", "NL", 3, 0),
    ("1_NL_4_ID", "NL", 1, 4),
    ("2_NL_8_DD", "NL", 2, -8),
])
def test_formatting_token_parse_print(text, kind, count, delta):
    token = FormattingToken.parse(text)
    assert (token.kind, token.count, token.delta) == (kind, count, delta)
    assert token.text == text


@pytest.mark.parametrize("bad", ["11_SP", "0_TB", "5_TB", "0_NL", "4_NL",
                                 "1_NL_0_ID", "1_XX", "SP", "1_NL_4_XX", ""])
def test_formatting_token_rejects_out_of_vocabulary(bad):
    with pytest.raises(ValueError):
        FormattingToken.parse(bad)


def test_vocabulary_round_trips_and_size():
    for width in (1, 2, 4):
        vocab = formatting_vocabulary(width)
        assert len(vocab) == 30
        for token in vocab:
            assert FormattingToken.parse(token.text) == token


# -- encode -------------------------------------------------------------------

def test_paper_line_encoding():
    src = ("    public void visitChangedNodes( NodeChangeVisitor visitor,"
           " int nodeTypes )    {\n        long denseMask = changeMask( true );\n")
    seq = seq_of(src, IndentUnit(" ", 4))
    text = seq.to_text()
    assert ") 4_SP { 1_NL_4_ID long" in text
    assert "Identifier 0_SP , 1_SP int 1_SP Identifier 1_SP )" in text


def test_zero_width_trivia_becomes_0_sp():
    seq = seq_of("x=1;")
    assert seq.to_text() == "Identifier 0_SP = 0_SP IntLiteral 0_SP ; 0_SP"


def test_blank_line_same_indent_has_no_delta():
    src = "    int a;\n\n    int b;\n"
    seq = seq_of(src, IndentUnit(" ", 4))
    # gap after ';' of the first statement: one blank line, equal indentation
    semi_index = list(seq.java).index(";")
    assert seq.fmt[semi_index].text == "2_NL"


def test_tab_indented_delta_in_tab_characters():
    src = "class A\n{\n\tint x;\n}\n"
    seq = seq_of(src)
    assert seq.indent == IndentUnit("\t", 1)
    brace = list(seq.java).index("{")
    assert seq.fmt[brace].text == "1_NL_1_ID"


def test_counts_clamped_to_caps():
    seq = seq_of("a            =  1;")  # 12 spaces
    assert seq.fmt[0].text == "10_SP"
    assert any("clamped" in w for w in seq.warnings)
    seq = seq_of("a\n\n\n\n\nb")  # 5 newlines
    assert seq.fmt[0].count == 3
    assert seq.fmt[0].kind == "NL"


def test_mixed_gap_warns_and_uses_majority():
    seq = seq_of("a \t\t= 1;")
    assert seq.fmt[0].kind == "TB"
    assert any("mixed" in w for w in seq.warnings)


# -- decode -------------------------------------------------------------------

@pytest.mark.parametrize("path", fixture_corpus_paths(), ids=lambda p: p.name)
def test_decode_encode_identity(path):
    text = path.read_text(encoding="utf-8")
    seq = encode(lex(text))
    assert decode(seq) == text


def test_decode_replacement_moves_brace_to_new_line():
    src = "    void f( int a )    {\n        int b;\n    }\n"
    seq = seq_of(src, IndentUnit(" ", 4))
    brace = list(seq.java).index("{")
    new_fmt = list(seq.fmt)
    new_fmt[brace - 1] = FormattingToken.parse("1_NL")
    out = decode(seq, new_fmt)
    assert "    void f( int a )\n    {\n        int b;\n" in out


def test_decode_indent_arithmetic():
    # token 1_NL_4_ID after a line indented 2 -> next line indented 6
    src = "  a();\n      b();\n"
    seq = seq_of(src, IndentUnit(" ", 2))
    semi = list(seq.java).index(";")
    assert seq.fmt[semi].delta == 4
    assert decode(seq) == src
    out = decode(seq, list(seq.fmt))
    assert out.split("\n")[1] == "      b();"


def test_decode_wrong_length_rejected():
    seq = seq_of("x = 1;")
    with pytest.raises(DecodeError):
        decode(seq, [FormattingToken.parse("0_SP")])


def test_negative_indent_clamps_to_zero():
    src = "a();\nb();\n"
    seq = seq_of(src, IndentUnit(" ", 4))
    semi = list(seq.java).index(";")
    fmts = list(seq.fmt)
    fmts[semi] = FormattingToken("NL", 1, -4)
    out = decode(seq, fmts)
    assert out.split("\n")[1] == "b();"


# -- splice -------------------------------------------------------------------

def test_splice_changes_only_the_window():
    src = "class A\n{\n    void f( int a )    {\n        int b;\n    }\n}\n"
    seq = seq_of(src, IndentUnit(" ", 4))
    brace = list(seq.java).index("{", 3)  # the method brace, not the class one
    out = splice(seq, brace - 1, brace - 1, [FormattingToken.parse("1_NL")])
    assert out == src.replace(")    {", ")\n    {")


def test_splice_preserves_bytes_outside_even_with_clamped_gaps():
    # 12 spaces would not survive decode(); splice must keep them verbatim
    src = "int teen            =    1;\nint x = 2;\n"
    seq = seq_of(src)
    fmts = [seq.fmt[-2]]
    out = splice(seq, len(seq) - 2, len(seq) - 2, fmts)
    assert out == src


# -- indent detection ----------------------------------------------------------

def test_detect_uniform_four_space_corpus():
    streams = [lex("class A\n{\n    int x;\n}\n")] * 4
    assert detect_indent_unit(streams) == IndentUnit(" ", 4)


def test_detect_uniform_tab_corpus():
    streams = [lex("class A\n{\n\tint x;\n}\n")] * 3
    assert detect_indent_unit(streams) == IndentUnit("\t", 1)


def test_detect_majority_mixed_corpus():
    two_space = lex("class A\n{\n  int x;\n}\n")
    tab = lex("class B\n{\n\tint y;\n}\n")
    # 70% two-space, 30% tab
    assert detect_indent_unit([two_space] * 7 + [tab] * 3) == IndentUnit(" ", 2)


def test_detect_fallback_without_evidence():
    assert detect_indent_unit([lex("int x;")]) == IndentUnit(" ", 4)


# -- error windows -------------------------------------------------------------

def window_for(src, line, column, rule="LeftCurly", **kw):
    seq = seq_of(src)
    v = Violation("f.java", line, column, rule, "msg")
    return extract_error_window(seq, v, WindowParams(**kw)), seq


BODY = """class A
{
    void f()
    {
        int a = 1;
        int b = 2;
        int c = a + b;
        g( a, b );
        int d = c;
    }

    void g( int x, int y )
    {
    }
}
"""


def test_window_covers_context_lines():
    window, seq = window_for(BODY, 7, None, rule="LineLength",
                             context_lines=2, tag_tokens=3)
    tokens = seq.stream.tokens
    lines_in_window = {tokens[i].line for i in range(window.start, window.end + 1)}
    assert lines_in_window == {5, 6, 7, 8, 9}


def test_column_tags_span_n_tokens_each_side():
    window, seq = window_for(BODY, 7, 19, rule="WhitespaceAround",
                             context_lines=5, tag_tokens=2)
    # anchor is '+' (column 19 on line 7); two code tokens each side
    inside = window.input_tokens()
    open_idx = inside.index("<WhitespaceAround>")
    close_idx = inside.index("</WhitespaceAround>")
    java_between = []
    for t in inside[open_idx + 1:close_idx]:
        try:
            FormattingToken.parse(t)
        except ValueError:
            java_between.append(t)
    assert java_between == ["=", "Identifier", "+", "Identifier", ";"]


def test_line_only_tag_placement_arithmetic():
    # 5-token line 'g( a, b );' with i=2, j=13: open tag 2 tokens before the
    # line start, close tag min(13, remaining) after line end
    window, seq = window_for(BODY, 8, None, rule="LineLength",
                             context_lines=5, tag_tokens=10,
                             line_tokens_before=2, line_tokens_after=13)
    tokens = seq.stream.tokens
    first_on_line = next(i for i, t in enumerate(tokens) if t.line == 8)
    last_on_line = max(i for i, t in enumerate(tokens) if t.line == 8)
    assert window.tag_open == first_on_line - 2
    assert window.tag_close == min(last_on_line + 13, window.end)


def test_window_truncates_at_file_start():
    window, seq = window_for("x = 1 ;\n", 1, 1, rule="NoWhitespaceBefore",
                             context_lines=5, tag_tokens=10)
    assert window.start == 0
    assert window.tag_open == 0
    text = window.input_text()
    assert text.startswith("<NoWhitespaceBefore>")
    assert text.count("<NoWhitespaceBefore>") == 1
    assert text.count("</NoWhitespaceBefore>") == 1


def test_window_tags_never_split_pairs():
    window, _ = window_for(BODY, 7, 17, rule="WhitespaceAround")
    tokens = window.input_tokens()
    # strip tags; remaining tokens alternate code/formatting exactly
    stripped = [t for t in tokens if not t.startswith("<")]
    assert len(stripped) % 2 == 0
    for i in range(0, len(stripped), 2):
        with pytest.raises(ValueError):
            FormattingToken.parse(stripped[i])
        FormattingToken.parse(stripped[i + 1])


def test_location_error_for_out_of_range_line():
    with pytest.raises(LocationError):
        window_for(BODY, 999, 1)


def test_column_matches_nearest_token_start():
    window, seq = window_for(BODY, 5, 10, rule="WhitespaceAround", tag_tokens=1)
    # column 10 is inside 'a'; nearest token behaviour keeps tags around it
    inside = window.input_tokens()
    assert "<WhitespaceAround>" in inside


# -- target alignment ----------------------------------------------------------

def test_align_target_recovers_original_formatting():
    clean = "    void f( int a )\n    {\n        int b;\n    }\n"
    broken = "    void f( int a )    {\n        int b;\n    }\n"
    clean_seq = seq_of(clean, IndentUnit(" ", 4))
    broken_seq = seq_of(broken, IndentUnit(" ", 4))
    v = Violation("f.java", 1, broken.index("{") + 1, "LeftCurly", "m")
    window = extract_error_window(broken_seq, v, WindowParams())
    target = align_target_window(clean_seq, window)
    brace = list(broken_seq.java).index("{")
    # the gap before '{' belongs to the preceding (token, gap) pair
    assert target[brace - 1 - window.start].text == "1_NL"
    # every other target token equals the window's input token
    diffs = [i for i, (t, w) in enumerate(zip(target, window.window_fmt()))
             if t != w]
    assert diffs == [brace - 1 - window.start]


def test_align_rejects_differing_token_sequences():
    a = seq_of("int a = 1;")
    b = seq_of("int a = 1 + 2;")
    v = Violation("f.java", 1, 5, "WhitespaceAround", "m")
    window = extract_error_window(b, v, WindowParams())
    with pytest.raises(AlignmentError):
        align_target_window(a, window)


# -- sequence structure property ------------------------------------------------

@settings(max_examples=30, deadline=None)
@given(st.integers(0, len(fixture_corpus_paths()) - 1))
def test_alternation_property(index):
    path = fixture_corpus_paths()[index]
    seq = encode(lex(path.read_text()))
    assert len(seq.java) == len(seq.fmt)
    for text in seq.java:
        with pytest.raises(ValueError):
            FormattingToken.parse(text)
