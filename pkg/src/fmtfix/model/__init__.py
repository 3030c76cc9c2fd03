from .io import load_model, save_model
from .seq2seq import (BeamParams, DivergenceError, FormattingSequence,
                      Hyperparams, Seq2SeqModel, apply_formatting,
                      evaluate_loss, ngram_translate, paper_scale_hyperparams,
                      predict_beam, train)
from .vocab import Vocabulary, build_vocab

__all__ = [
    "BeamParams", "DivergenceError", "FormattingSequence", "Hyperparams",
    "Seq2SeqModel", "Vocabulary", "apply_formatting", "build_vocab",
    "evaluate_loss", "load_model", "ngram_translate",
    "paper_scale_hyperparams", "predict_beam", "save_model", "train",
]
