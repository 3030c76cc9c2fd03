"""Acceptance gate: one test per criterion, printed pass/fail per line.

Run with ``pytest tests/test_acceptance.py -v -s``. The desk-scale learning
criteria train two models over the bundled synthetic project (session
fixture), so the module takes several minutes of CPU; everything else is
fast.
"""

import random
import re
import time
from collections import Counter
from contextlib import contextmanager

import pytest

from fmtfix.checker import check, format_report, parse_ruleset
from fmtfix.diffs import diff_size
from fmtfix.encoding import (FormattingToken, WindowParams, decode, encode,
                             extract_error_window)
from fmtfix.injection import (GenerationConfig, generate_training_set,
                              mine_3grams, sample_replacement)
from fmtfix.lexing import TokenKind, lex, render
from fmtfix.model import BeamParams
from fmtfix.model.seq2seq import _encode_rows, evaluate_loss
from fmtfix.pipeline import (CATEGORIES, RANDOM, REPAIRED_NO_ERROR,
                             THREE_GRAMS, evaluate_corpus, repair_file)

from conftest import FIXTURES, fixture_corpus_paths

FIG_4C_TAGGED_REGION = (
    "<LeftCurly> Identifier 0_SP , 1_SP int 1_SP Identifier 1_SP ) 4_SP { "
    "1_NL_4_ID long 1_SP Identifier 1_SP = 1_SP Identifier 0_SP ( 1_SP "
    "</LeftCurly>")

_timings = {}


@contextmanager
def criterion(number, label):
    try:
        yield
    except Exception:
        print(f"\nFAIL  criterion {number:2d}: {label}")
        raise
    print(f"\npass  criterion {number:2d}: {label}")


@pytest.fixture(scope="module")
def held_out_evaluation(trained_models, synthetic_ruleset, synthetic_files):
    """Criterion 7's run, shared by criteria 8, 9, and 10."""
    models, _, train_timings = trained_models
    started = time.perf_counter()
    cfg = GenerationConfig(number_of_errors=100, batch_size=200,
                           protocol="random", seed=99)
    held_out = generate_training_set(synthetic_ruleset, synthetic_files, cfg)
    error_files = [(f"err{i:03d}.java", pair.err_file)
                   for i, pair in enumerate(held_out)]
    report, outcomes = evaluate_corpus(error_files, synthetic_ruleset, models,
                                       WindowParams(), BeamParams(width=5))
    elapsed = time.perf_counter() - started
    _timings["evaluation"] = elapsed
    _timings["training_total"] = sum(train_timings.values())
    return report, outcomes, error_files


def test_criterion_01_golden_end_to_end(trained_models, golden_ruleset,
                                        golden_text, golden_repaired_text):
    with criterion(1, "golden end-to-end repair reproduces the worked example"):
        models, _, _ = trained_models

        # the encoded window matches the published token sequence exactly
        seq = encode(lex(golden_text, "NodeRelationshipCache.java"))
        violations = check(golden_text, golden_ruleset,
                           "NodeRelationshipCache.java")
        assert len(violations) == 1
        assert format_report(violations[0]) == (
            "[ERROR] NodeRelationshipCache.java:812:82: "
            "'{' at column 82 should be on a new line. [LeftCurly]")
        window5 = extract_error_window(seq, violations[0],
                                       WindowParams(tag_tokens=5))
        text5 = window5.input_text()
        assert FIG_4C_TAGGED_REGION in text5
        # the default window (10 tokens per side) contains the same core
        window10 = extract_error_window(seq, violations[0], WindowParams())
        core = FIG_4C_TAGGED_REGION.split("> ", 1)[1].rsplit(" </", 1)[0]
        assert core in window10.input_text()

        # full repair, timed without training
        started = time.perf_counter()
        outcome = repair_file(golden_text, golden_ruleset, models,
                              WindowParams(tag_tokens=5), BeamParams(width=5),
                              path="NodeRelationshipCache.java")
        elapsed = time.perf_counter() - started
        assert outcome.category == REPAIRED_NO_ERROR
        assert outcome.chosen.text == golden_repaired_text
        assert elapsed < 5.0, f"repair took {elapsed:.2f}s"

        # the applied change replaces 4_SP with 1_NL at the brace position
        brace = list(seq.java).index("{", 3)
        assert seq.fmt[brace - 1].text == "4_SP"
        repaired_seq = encode(lex(outcome.chosen.text))
        assert repaired_seq.fmt[brace - 1].text == "1_NL"
        diffs = [i for i, (a, b) in enumerate(zip(seq.fmt, repaired_seq.fmt))
                 if a != b]
        assert diffs == [brace - 1]


def test_criterion_02_round_trip_suite():
    with criterion(2, "render/lex and decode/encode are byte identities"):
        paths = fixture_corpus_paths()
        assert len(paths) >= 50
        kinds_seen = set()
        for path in paths:
            text = path.read_text(encoding="utf-8")
            stream = lex(text)
            assert render(stream) == text, path.name
            assert decode(encode(stream)) == text, path.name
            kinds_seen.update(t.kind for t in stream.tokens)
        # every lexical token class appears somewhere in the corpus
        assert kinds_seen >= (set(TokenKind) - {TokenKind.ANNOTATION})


_REPORT_GRAMMAR = re.compile(
    r"^\[ERROR\] (?P<file>.+?):(?P<line>\d+)(?::(?P<col>\d+))?: "
    r"(?P<msg>.+) \[(?P<rule>[A-Za-z]+)\]$")


def test_criterion_03_checker_fixture_suite():
    with criterion(3, "18-rule fixture suite with exact locations and reports"):
        rules_dir = FIXTURES / "rules"
        rule_names = sorted(p.name for p in rules_dir.iterdir() if p.is_dir())
        assert len(rule_names) == 18
        for rule in rule_names:
            ruleset = parse_ruleset((rules_dir / rule / "ruleset.xml").read_text())
            bad = sorted((rules_dir / rule).glob("bad_*.java"))
            good = sorted((rules_dir / rule).glob("good_*.java"))
            assert len(bad) >= 3 and len(good) >= 3, rule
            for path in bad:
                violations = check(path.read_text(), ruleset, path="f.java")
                assert violations, f"{rule}/{path.name} found nothing"
                reports = [format_report(v) for v in violations]
                for line in reports:
                    m = _REPORT_GRAMMAR.match(line)
                    assert m and m.group("rule") == rule, line
                expected = path.with_suffix(".expected").read_text().splitlines()
                stripped = [r.replace("[ERROR] f.java:", "", 1) for r in reports]
                assert stripped == expected, f"{rule}/{path.name}"
            for path in good:
                assert check(path.read_text(), ruleset) == [], \
                    f"{rule}/{path.name} is not clean"


def test_criterion_04_injection_properties(synthetic_ruleset, synthetic_files):
    with criterion(4, "1000-pair dataset: single seeded violation, clean "
                      "original, identical code tokens, deterministic"):
        cfg = GenerationConfig(number_of_errors=1000, batch_size=500,
                               protocol="random", seed=77)
        pairs = generate_training_set(synthetic_ruleset, synthetic_files, cfg)
        assert len(pairs) == 1000
        # independent re-check pass over the whole output
        for pair in pairs:
            errs = check(pair.err_file, synthetic_ruleset)
            assert len(errs) == 1
            assert check(pair.orig_file, synthetic_ruleset) == []
            err_java = tuple(encode(lex(pair.err_file)).java)
            orig_java = tuple(encode(lex(pair.orig_file)).java)
            assert err_java == orig_java
        again = generate_training_set(synthetic_ruleset, synthetic_files, cfg)
        assert [(p.err_file, p.mutation_log) for p in pairs] == \
            [(p.err_file, p.mutation_log) for p in again]


def test_criterion_05_three_gram_sampling_distribution():
    with criterion(5, "3-gram replacement frequencies within 3% over 10^4 draws"):
        clean = ["void f( int a )\n{\n}\n"] * 3 + ["void f(int a) {\n}\n"]
        corpus = mine_3grams([encode(lex(t)) for t in clean])
        options = corpus.alternatives(")", "{")
        total = sum(count for _, count in options)
        rng = random.Random(5)
        draws = Counter(sample_replacement(corpus, ")", "{", rng).text
                        for _ in range(10_000))
        for fmt, count in options:
            expected = count / total
            observed = draws[fmt.text] / 10_000
            assert abs(observed - expected) <= 0.03, \
                f"{fmt.text}: {observed:.3f} vs {expected:.3f}"


def test_criterion_06_model_numerics():
    with criterion(6, "gradient checks, memorization, normalized softmax"):
        import numpy as np
        from test_model import finite_difference_check, random_tiny_config
        for seed in range(20):
            hp = random_tiny_config(seed)
            worst = finite_difference_check(hp, seed, samples_per_tensor=8)
            for name, rel in worst.items():
                assert rel <= 1e-4, f"seed {seed} {name}: {rel:.2e}"

        from test_model import _ruleset, memorization_rows
        from fmtfix.model import Hyperparams, build_vocab, train
        rows = memorization_rows()
        vocab = build_vocab(rows, _ruleset(["LeftCurly"]))
        hp = Hyperparams(units=32, embedding=32, iterations=200, seed=3,
                         eval_every=200, learning_rate=1.0, lr_decay=0.0)
        model = train(rows, hp, vocab=vocab)
        _, accuracy = evaluate_loss(model, _encode_rows(rows, vocab))
        assert accuracy == 1.0

        from fmtfix.model.network import Network, init_params, log_softmax
        from fmtfix.model.vocab import BOS
        hp = Hyperparams(units=16, embedding=12, seed=1)
        params = init_params(hp, 24, 12)
        net = Network(params, hp)
        rng = np.random.default_rng(2)
        src = rng.integers(0, 24, (3, 8))
        mask = np.ones((3, 8), dtype=np.float32)
        enc, finals, _ = net.encode(src, mask)
        states, _ = net.bridge(finals)
        y = params["emb_out"][np.full(3, BOS)]
        for _ in range(5):
            logits, states, _ = net.decode_step(states, y, enc, (mask - 1.0) * 1e9)
            probs = np.exp(log_softmax(logits))
            assert np.all(np.abs(probs.sum(axis=1) - 1.0) <= 1e-6)
            y = params["emb_out"][probs.argmax(axis=1)]


def test_criterion_07_desk_scale_learning(held_out_evaluation):
    with criterion(7, "two-model pipeline repairs >=70% of held-out errors, "
                      "n-gram baseline alone >=40%, within the time budget"):
        report, outcomes, error_files = held_out_evaluation
        repaired = report.category_counts[REPAIRED_NO_ERROR]
        assert report.total == 100
        assert repaired >= 70, f"two-model pipeline repaired {repaired}/100"

        # the baseline alone: no neural candidates pooled
        synthetic_ruleset = parse_ruleset(
            (FIXTURES / "synthetic" / "ruleset.xml").read_text())
        corpus_seqs = [encode(lex(p.read_text()))
                       for p in sorted((FIXTURES / "synthetic" / "src").glob("*.java"))]
        baseline = mine_3grams(corpus_seqs)
        started = time.perf_counter()
        base_report, _ = evaluate_corpus(error_files, synthetic_ruleset, {},
                                         WindowParams(), BeamParams(width=5),
                                         baseline=baseline)
        _timings["baseline_eval"] = time.perf_counter() - started
        base_repaired = base_report.category_counts[REPAIRED_NO_ERROR]
        assert base_repaired >= 40, f"baseline repaired {base_repaired}/100"

        total = (_timings["training_total"] + _timings["evaluation"]
                 + _timings["baseline_eval"])
        assert total <= 30 * 60, f"end-to-end took {total:.0f}s"
        print(f"\n      repaired {repaired}/100, baseline {base_repaired}/100, "
              f"total runtime {total:.0f}s")


def test_criterion_08_selection_optimality(held_out_evaluation):
    with criterion(8, "chosen repairs have brute-force minimal diffs; "
                      "candidate pool is 2 x beam width"):
        _, outcomes, error_files = held_out_evaluation
        checked = 0
        for outcome, (_, original) in zip(outcomes, error_files):
            assert len(outcome.candidates) == 10  # x=5 per model, two models
            if not outcome.repaired:
                continue
            passing = [c for c in outcome.candidates if c.category == "passing"]
            brute_force = min(diff_size(original, c.text) for c in passing)
            assert outcome.chosen.diff_lines == brute_force
            checked += 1
        assert checked > 0


def test_criterion_09_outcome_taxonomy(held_out_evaluation):
    with criterion(9, "categories exhaustive and exclusive; exclusive "
                      "contributions add up to the repaired count"):
        report, outcomes, _ = held_out_evaluation
        assert sum(report.category_counts.values()) == report.total == 100
        for outcome in outcomes:
            assert outcome.category in CATEGORIES
        repaired = report.category_counts[REPAIRED_NO_ERROR]
        assert (report.exclusive_random + report.exclusive_3gram
                + report.both_models) == repaired
        assert report.baseline_only == 0
        # per-rule rows each sum to that rule's error count
        assert sum(sum(row.values()) for row in report.per_rule.values()) == 100


def test_criterion_10_prediction_latency(held_out_evaluation):
    with criterion(10, "median end-to-end prediction latency <= 5 s per error"):
        report, _, _ = held_out_evaluation
        assert 0 < report.median_seconds <= 5.0, report.median_seconds
        assert report.mean_seconds > 0
        print(f"\n      median {report.median_seconds:.3f}s, "
              f"mean {report.mean_seconds:.3f}s per error")
