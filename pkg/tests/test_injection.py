import random
from collections import Counter

import pytest

from fmtfix.checker import check
from fmtfix.encoding import IndentUnit, WindowParams, encode
from fmtfix.injection import (Edit, ExhaustionError, GenerationConfig,
                              NoMatchError, ThreeGram, derive_rng,
                              enumerate_edits, generate_training_set,
                              inject_3gram, inject_random, mine_3grams,
                              sample_replacement, save_dataset)
from fmtfix.lexing import lex


def seq_of(src):
    return encode(lex(src))


# -- random protocol --------------------------------------------------------------

def test_edit_enumerator_matches_hand_oracle():
    # "x = 1;"  offsets: x=0, sp=1, ==2, sp=3, 1=4, ;=5
    edits = enumerate_edits("x = 1;", IndentUnit(" ", 4))
    expected = set()
    # insertions before/after every token boundary
    for offset in (0, 1, 2, 3, 4, 5, 6):
        for ch in (" ", "\t", "\n"):
            expected.add(("insert", offset, ch))
    # deletions: both gaps around '=' (operator-adjacent) and the
    # space before '1'... the gap between '1' and ';' is empty;
    # ';' also makes the preceding gap punctuation-adjacent
    expected.add(("delete", 1, " "))
    expected.add(("delete", 3, " "))
    got = {(e.kind, e.offset, e.char) for e in edits}
    assert got == expected


def test_inject_random_produces_single_char_edit():
    rng = random.Random(7)
    src = "x = 1;"
    mutated, log = inject_random(src, rng)
    assert abs(len(mutated) - len(src)) == 1
    assert log.split()[0] in ("insert", "delete")


def test_delete_before_equals_example():
    edits = enumerate_edits("x = 1;", IndentUnit(" ", 4))
    target = [e for e in edits if e.kind == "delete" and e.offset == 1]
    assert target and target[0].apply("x = 1;") == "x= 1;"


def test_insert_newline_moves_brace():
    src = "if (c) {\n}\n"
    edits = enumerate_edits(src, IndentUnit(" ", 4))
    at_brace = [e for e in edits
                if e.kind == "insert" and e.char == "\n"
                and e.offset == src.index("{")]
    assert at_brace
    out = at_brace[0].apply(src)
    assert out.startswith("if (c) \n{")


def test_single_token_file_always_has_insertions():
    edits = enumerate_edits("class", IndentUnit(" ", 4))
    assert edits
    assert all(e.kind == "insert" for e in edits)


def test_deletion_never_merges_tokens():
    # deleting the only space between '+' and '+' would create '++'
    edits = enumerate_edits("a = b + +c;", IndentUnit(" ", 4))
    plus2 = "a = b + +c;".index("+ +") + 1
    merging = [e for e in edits if e.kind == "delete" and e.offset == plus2]
    assert not merging
    for e in edits:
        mutated = e.apply("a = b + +c;")
        assert [t.lexeme for t in lex(mutated).tokens] == \
            [t.lexeme for t in lex("a = b + +c;").tokens]


def test_indent_run_deletion_sites():
    src = "class A\n{\n        int x;\n}\n"
    edits = enumerate_edits(src, IndentUnit(" ", 4))
    indent_start = src.index("        int")
    deletions = {e.offset for e in edits if e.kind == "delete"}
    assert indent_start in deletions  # inside the 8-space indentation run


# -- 3-gram protocol ----------------------------------------------------------------

def test_mine_3grams_hand_enumeration():
    corpus = mine_3grams([seq_of("a = 1;")])
    got = {(g.left, g.fmt.text, g.right): n for g, n in corpus.counts.items()}
    assert got == {
        ("Identifier", "1_SP", "="): 1,
        ("=", "1_SP", "IntLiteral"): 1,
        ("IntLiteral", "0_SP", ";"): 1,
    }


def test_mine_3grams_empty_sequence_contributes_nothing():
    corpus = mine_3grams([seq_of("a = 1;"), seq_of("")])
    assert corpus.total() == 3


def test_mine_3grams_duplicate_doubles_counts():
    single = mine_3grams([seq_of("a = 1;")])
    double = mine_3grams([seq_of("a = 1;"), seq_of("a = 1;")])
    for gram, count in single.counts.items():
        assert double.counts[gram] == 2 * count


def test_sample_replacement_follows_frequencies():
    from fmtfix.encoding import FormattingToken
    corpus = mine_3grams([seq_of("void f( int a )\n{\n}\n")] * 3
                         + [seq_of("void f(int a) {\n}\n")])
    # context (')', '{'): three files use 1_NL, one uses 1_SP
    options = dict((fmt.text, n) for fmt, n in corpus.alternatives(")", "{"))
    assert options == {"1_NL": 3, "1_SP": 1}
    rng = random.Random(3)
    draws = Counter(sample_replacement(corpus, ")", "{", rng).text
                    for _ in range(10_000))
    assert abs(draws["1_NL"] / 10_000 - 0.75) < 0.03
    assert abs(draws["1_SP"] / 10_000 - 0.25) < 0.03


def test_inject_3gram_replaces_one_gap():
    files = ["int a = 1;\nint b = 2;\n", "int c=3;\nint d=4;\n"]
    corpus = mine_3grams([seq_of(t) for t in files])
    rng = random.Random(1)
    mutated, log = inject_3gram(files[0], corpus, rng)
    assert mutated != files[0]
    assert log.startswith("replace ")
    assert [t.lexeme for t in lex(mutated).tokens] == \
        [t.lexeme for t in lex(files[0]).tokens]


def test_inject_3gram_forced_context_skips_position():
    # corpus contains only the file's own formatting: every draw equals the
    # original, so every position is forced
    text = "int a = 1;\n"
    corpus = mine_3grams([seq_of(text)])
    with pytest.raises(NoMatchError):
        inject_3gram(text, corpus, random.Random(0))


def test_inject_3gram_no_matching_context():
    corpus = mine_3grams([seq_of("while (true) { }")])
    with pytest.raises(NoMatchError):
        inject_3gram("int a = 1;", corpus, random.Random(0))


# -- batch generation ----------------------------------------------------------------

def test_generate_deterministic(synthetic_ruleset, synthetic_files):
    cfg = GenerationConfig(number_of_errors=10, batch_size=40,
                           protocol="random", seed=7)
    a = generate_training_set(synthetic_ruleset, synthetic_files, cfg)
    b = generate_training_set(synthetic_ruleset, synthetic_files, cfg)
    assert [(p.err_file, p.orig_file, p.mutation_log) for p in a] == \
        [(p.err_file, p.orig_file, p.mutation_log) for p in b]
    assert len(a) == 10


def test_generated_pairs_satisfy_contract(synthetic_ruleset, synthetic_files):
    cfg = GenerationConfig(number_of_errors=12, batch_size=40,
                           protocol="3grams", seed=9)
    pairs = generate_training_set(synthetic_ruleset, synthetic_files, cfg)
    for pair in pairs:
        errs = check(pair.err_file, synthetic_ruleset)
        assert len(errs) == 1
        assert check(pair.orig_file, synthetic_ruleset) == []
        err_seq = encode(lex(pair.err_file))
        orig_seq = encode(lex(pair.orig_file))
        assert err_seq.java == orig_seq.java
        assert len(pair.target) == pair.window.size


def test_dirty_corpus_rejected(synthetic_ruleset):
    dirty = [("bad.java", "class A\n{\n    int x=1;\n}\n")]
    cfg = GenerationConfig(number_of_errors=1, batch_size=5, protocol="random", seed=0)
    with pytest.raises(ValueError, match="not violation-free"):
        generate_training_set(synthetic_ruleset, dirty, cfg)


def test_watchdog_fires_when_nothing_is_accepted(synthetic_ruleset):
    # a corpus whose only legal edits never produce exactly one violation
    quiet = [("q.java", "class A\n{\n}\n")]
    cfg = GenerationConfig(number_of_errors=5, batch_size=2, protocol="random", seed=1)
    with pytest.raises(ExhaustionError):
        generate_training_set(synthetic_ruleset, quiet, cfg)


def test_dataset_layout_on_disk(tmp_path, synthetic_ruleset, synthetic_files):
    cfg = GenerationConfig(number_of_errors=3, batch_size=30,
                           protocol="random", seed=3)
    pairs = generate_training_set(synthetic_ruleset, synthetic_files, cfg)
    save_dataset(pairs, tmp_path, "random")
    entry = tmp_path / "random" / "00000"
    assert (entry / "err.java").exists()
    assert (entry / "orig.java").exists()
    assert (entry / "input.txt").exists()
    assert (entry / "target.txt").exists()
    meta = (entry / "meta.json").read_text()
    assert '"rule"' in meta and '"mutation_log"' in meta and '"seed_path"' in meta


def test_rng_streams_are_stable():
    assert derive_rng(1, 2, 3).random() == derive_rng(1, 2, 3).random()
    assert derive_rng(1, 2, 3).random() != derive_rng(1, 2, 4).random()
