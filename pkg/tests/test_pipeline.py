import pytest

from fmtfix.checker import Violation, check, parse_ruleset
from fmtfix.diffs import diff_size
from fmtfix.lexing import lex
from fmtfix.pipeline import (BROKEN, CATEGORIES, NGRAM_BASELINE,
                             NOT_REPAIRED_SAME_ERROR, RANDOM,
                             REPAIRED_NO_ERROR, THREE_GRAMS, RepairCandidate,
                             select_repair, verify_candidates)


def rules(xml_body):
    return parse_ruleset(f'<module name="Checker"><module name="TreeWalker">'
                         f'{xml_body}</module></module>')


LEFT_CURLY_NL = rules('<module name="LeftCurly">'
                      '<property name="option" value="nl"/></module>')

BROKEN_SRC = "class A\n{\n    void f()    {\n    }\n"  # missing final brace

ERR_SRC = "class A\n{\n    void f()    {\n        g();\n    }\n}\n"
FIXED_SRC = "class A\n{\n    void f()\n    {\n        g();\n    }\n}\n"


def cand(text, source=RANDOM, rank=1, score=-1.0):
    return RepairCandidate(text, source, rank, score)


def original_violation():
    vs = check(ERR_SRC, LEFT_CURLY_NL, "f.java")
    assert len(vs) == 1
    return vs[0]


# -- verification -------------------------------------------------------------

def test_identical_to_clean_original_passes():
    v = original_violation()
    partition = verify_candidates([cand(FIXED_SRC)], LEFT_CURLY_NL, v,
                                  lex(ERR_SRC))
    assert len(partition["passing"]) == 1


def test_unbalanced_candidate_is_broken():
    v = original_violation()
    partition = verify_candidates([cand(BROKEN_SRC)], LEFT_CURLY_NL, v,
                                  lex(ERR_SRC))
    assert len(partition["broken"]) == 1


def test_unchanged_candidate_keeps_same_error():
    v = original_violation()
    partition = verify_candidates([cand(ERR_SRC)], LEFT_CURLY_NL, v,
                                  lex(ERR_SRC))
    assert len(partition["same_error"]) == 1


def test_same_plus_new_classification():
    ruleset = rules('<module name="LeftCurly">'
                    '<property name="option" value="nl"/></module>'
                    '<module name="ParenPad"/>')
    err = "class A\n{\n    void f()    {\n        g();\n    }\n}\n"
    v = check(err, ruleset, "f.java")[0]
    # keeps the brace violation and introduces paren padding
    worse = "class A\n{\n    void f( )    {\n        g();\n    }\n}\n"
    partition = verify_candidates([cand(worse)], ruleset, v, lex(err))
    assert len(partition["same_plus_new"]) == 1


def test_new_error_classification():
    ruleset = rules('<module name="LeftCurly">'
                    '<property name="option" value="nl"/></module>'
                    '<module name="ParenPad"/>')
    err = "class A\n{\n    void f()    {\n        g();\n    }\n}\n"
    v = check(err, ruleset, "f.java")[0]
    # fixes the brace but pads a paren
    other = "class A\n{\n    void f()\n    {\n        g( );\n    }\n}\n"
    partition = verify_candidates([cand(other)], ruleset, v, lex(err))
    assert len(partition["new_error"]) == 1


def test_same_error_tracked_across_line_shift():
    # the violation moves two lines down but stays the same rule at the
    # same token: still "same"
    ruleset = rules('<module name="ParenPad"/>')
    err = "class A\n{\n    void f()\n    {\n        g( 1);\n    }\n}\n"
    v = check(err, ruleset, "f.java")[0]
    shifted = "class A\n{\n\n\n    void f()\n    {\n        g( 1);\n    }\n}\n"
    partition = verify_candidates([cand(shifted)], ruleset, v, lex(err))
    assert len(partition["same_error"]) == 1


# -- selection ------------------------------------------------------------------

def test_select_minimal_diff():
    original = "a\nb\nc\nd\ne\n"
    candidates = [
        cand("a\nX\nY\nZ\nd\ne\n"),          # bigger diff
        cand("a\nb\nX\nd\ne\n"),              # two lines changed? no: one swap
        cand("a\nX\nc\nY\ne\n"),              # two swaps
    ]
    chosen = select_repair(candidates, original)
    assert chosen is candidates[1]
    assert chosen.diff_lines == diff_size(original, chosen.text)
    assert chosen.diff_lines == min(diff_size(original, c.text) for c in candidates)


def test_select_tie_prefers_3gram_model():
    original = "a\nb\n"
    c_random = cand("a\nX\n", source=RANDOM)
    c_3gram = cand("a\nY\n", source=THREE_GRAMS)
    assert select_repair([c_random, c_3gram], original) is c_3gram


def test_select_tie_prefers_lower_beam_rank():
    original = "a\nb\n"
    c2 = cand("a\nY\n", source=RANDOM, rank=2)
    c1 = cand("a\nX\n", source=RANDOM, rank=1)
    assert select_repair([c2, c1], original) is c1


def test_select_baseline_ranks_last_on_ties():
    original = "a\nb\n"
    c_base = cand("a\nZ\n", source=NGRAM_BASELINE)
    c_random = cand("a\nX\n", source=RANDOM)
    assert select_repair([c_base, c_random], original) is c_random


def test_select_single_candidate():
    only = cand("x\n")
    assert select_repair([only], "y\n") is only


def test_select_empty_rejected():
    with pytest.raises(ValueError):
        select_repair([], "x")


def test_categories_are_complete():
    assert len(CATEGORIES) == 5
    assert REPAIRED_NO_ERROR in CATEGORIES and BROKEN in CATEGORIES
