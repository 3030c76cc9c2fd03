import sys
from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_corpus_paths():
    """Every .java fixture that must round-trip byte-exactly."""
    paths = sorted((FIXTURES / "clean").glob("*.java"))
    paths += sorted((FIXTURES / "synthetic" / "src").glob("*.java"))
    paths += [FIXTURES / "golden" / "NodeRelationshipCache.java"]
    return paths


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def synthetic_ruleset():
    from fmtfix.checker import parse_ruleset
    return parse_ruleset((FIXTURES / "synthetic" / "ruleset.xml").read_text())


@pytest.fixture(scope="session")
def synthetic_files():
    src = FIXTURES / "synthetic" / "src"
    return [(str(p), p.read_text()) for p in sorted(src.glob("*.java"))]


@pytest.fixture(scope="session")
def golden_ruleset():
    from fmtfix.checker import parse_ruleset
    return parse_ruleset((FIXTURES / "golden" / "ruleset.xml").read_text())


@pytest.fixture(scope="session")
def golden_text():
    return (FIXTURES / "golden" / "NodeRelationshipCache.java").read_text()


@pytest.fixture(scope="session")
def golden_repaired_text():
    return (FIXTURES / "golden" / "NodeRelationshipCache.repaired.java").read_text()


def _generate_and_train(protocol, seed, synthetic_ruleset, synthetic_files,
                        pairs, iterations):
    from fmtfix.encoding import WindowParams
    from fmtfix.injection import GenerationConfig, generate_training_set
    from fmtfix.model import Hyperparams, build_vocab, train

    cfg = GenerationConfig(number_of_errors=pairs, batch_size=400,
                           protocol=protocol, seed=seed)
    dataset = generate_training_set(synthetic_ruleset, synthetic_files, cfg,
                                    WindowParams())
    vocab = build_vocab(dataset, synthetic_ruleset, 4)
    hp = Hyperparams(units=64, embedding=64, layers=1, iterations=iterations,
                     seed=seed, eval_every=500,
                     learning_rate=1.0, lr_decay=0.0008)
    return dataset, train(dataset, hp, vocab=vocab)


@pytest.fixture(scope="session")
def trained_models(synthetic_ruleset, synthetic_files):
    """Two desk-scale models over the synthetic project (heavy; shared).

    The elapsed wall-clock time per protocol is recorded so the acceptance
    suite can assert the end-to-end runtime budget.
    """
    import time
    from fmtfix.pipeline import RANDOM, THREE_GRAMS
    datasets = {}
    models = {}
    timings = {}
    for protocol, seed in ((RANDOM, 11), (THREE_GRAMS, 12)):
        started = time.perf_counter()
        dataset, model = _generate_and_train(protocol, seed, synthetic_ruleset,
                                             synthetic_files, pairs=800,
                                             iterations=2500)
        timings[protocol] = time.perf_counter() - started
        datasets[protocol] = dataset
        models[protocol] = model
    return models, datasets, timings
