"""Pipeline behavior with real trained models (shares the session fixture)."""

import pytest

from fmtfix.checker import check
from fmtfix.encoding import WindowParams, encode
from fmtfix.injection import GenerationConfig, generate_training_set, mine_3grams
from fmtfix.lexing import lex
from fmtfix.model import BeamParams, FormattingSequence
from fmtfix.pipeline import (NOT_REPAIRED_SAME_ERROR, RANDOM,
                             REPAIRED_NO_ERROR, THREE_GRAMS, evaluate_corpus,
                             repair_file)
import fmtfix.pipeline as pipeline_mod


@pytest.fixture(scope="module")
def seeded_errors(synthetic_ruleset, synthetic_files):
    cfg = GenerationConfig(number_of_errors=8, batch_size=60,
                           protocol="random", seed=123)
    pairs = generate_training_set(synthetic_ruleset, synthetic_files, cfg)
    return [(f"e{i}.java", p.err_file) for i, p in enumerate(pairs)]


def test_repair_file_end_to_end(trained_models, synthetic_ruleset, seeded_errors):
    models, _, _ = trained_models
    path, text = seeded_errors[0]
    outcome = repair_file(text, synthetic_ruleset, models, path=path)
    assert len(outcome.candidates) == 10
    if outcome.repaired:
        # the selected repair passes the checker and preserves code tokens
        assert check(outcome.chosen.text, synthetic_ruleset) == []
        assert tuple(encode(lex(outcome.chosen.text)).java) == \
            tuple(encode(lex(text)).java)


def test_candidates_never_change_code_tokens(trained_models, synthetic_ruleset,
                                             seeded_errors):
    models, _, _ = trained_models
    for path, text in seeded_errors[:3]:
        outcome = repair_file(text, synthetic_ruleset, models, path=path)
        original_java = tuple(encode(lex(text)).java)
        for cand in outcome.candidates:
            if cand.category == "broken":
                continue
            assert tuple(encode(lex(cand.text)).java) == original_java


def test_echo_models_yield_not_repaired(monkeypatch, trained_models,
                                        synthetic_ruleset, seeded_errors):
    models, _, _ = trained_models

    def echo_beam(model, window, bp):
        return [FormattingSequence(tuple(window.window_fmt()), 0.0)]

    monkeypatch.setattr(pipeline_mod, "predict_beam", echo_beam)
    path, text = seeded_errors[0]
    outcome = repair_file(text, synthetic_ruleset, models, path=path)
    assert outcome.category == NOT_REPAIRED_SAME_ERROR
    assert outcome.chosen is None


def test_repair_rejects_multi_violation_files(trained_models, synthetic_ruleset):
    models, _, _ = trained_models
    text = "class A\n{\n    void f()    {\n        int a=1;\n    }\n}\n"
    assert len(check(text, synthetic_ruleset)) > 1
    with pytest.raises(ValueError, match="exactly one violation"):
        repair_file(text, synthetic_ruleset, models)


def test_broken_input_maps_to_broken_outcome(trained_models, synthetic_ruleset):
    models, _, _ = trained_models
    outcome = repair_file("class A { void f() {\n", synthetic_ruleset, models)
    assert outcome.category == "broken"


def test_parallel_evaluation_matches_sequential(trained_models,
                                                synthetic_ruleset, seeded_errors):
    models, _, _ = trained_models
    subset = seeded_errors[:4]
    seq_report, seq_outcomes = evaluate_corpus(subset, synthetic_ruleset, models)
    par_report, par_outcomes = evaluate_corpus(subset, synthetic_ruleset, models,
                                               jobs=2)
    assert seq_report.category_counts == par_report.category_counts
    assert [o.category for o in seq_outcomes] == [o.category for o in par_outcomes]
    assert [o.chosen.text if o.chosen else None for o in seq_outcomes] == \
        [o.chosen.text if o.chosen else None for o in par_outcomes]


def test_baseline_candidate_pooled_when_enabled(trained_models,
                                                synthetic_ruleset,
                                                synthetic_files, seeded_errors):
    models, _, _ = trained_models
    baseline = mine_3grams([encode(lex(t)) for _, t in synthetic_files])
    path, text = seeded_errors[1]
    outcome = repair_file(text, synthetic_ruleset, models, baseline=baseline,
                          path=path)
    assert len(outcome.candidates) == 11
    assert sum(1 for c in outcome.candidates
               if c.source_model == "ngram") == 1
