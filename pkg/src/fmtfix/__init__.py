"""fmtfix: learns project formatting conventions and repairs rule violations.

The toolkit lexes Java-like source losslessly, checks it against a
configurable formatting ruleset, seeds single errors into clean files to
self-generate training data, trains a sequence-to-sequence repair model
over abstract token windows, and predicts, verifies, and selects minimal
repairs.
"""

__version__ = "0.1.0"

from .checker import (BrokenFileError, ConfigError, Ruleset, Violation,
                      check, format_report, parse_ruleset)
from .encoding import (AbstractSequence, ErrorWindow, FormattingToken,
                       IndentUnit, WindowParams, decode, detect_indent_unit,
                       encode, extract_error_window)
from .lexing import ConcreteToken, ConcreteTokenStream, LexError, Trivia, lex, render
from .model import (BeamParams, Hyperparams, Seq2SeqModel, apply_formatting,
                    build_vocab, load_model, ngram_translate, predict_beam,
                    save_model, train)
from .pipeline import (RepairCandidate, RepairOutcome, evaluate_corpus,
                       repair_file, select_repair, verify_candidates)

__all__ = [
    "AbstractSequence", "BeamParams", "BrokenFileError", "ConcreteToken",
    "ConcreteTokenStream", "ConfigError", "ErrorWindow", "FormattingToken",
    "Hyperparams", "IndentUnit", "LexError", "RepairCandidate",
    "RepairOutcome", "Ruleset", "Seq2SeqModel", "Trivia", "Violation",
    "WindowParams", "apply_formatting", "build_vocab", "check", "decode",
    "detect_indent_unit", "encode", "evaluate_corpus", "extract_error_window",
    "format_report", "lex", "load_model", "ngram_translate", "parse_ruleset",
    "predict_beam", "render", "repair_file", "save_model", "select_repair",
    "train", "verify_candidates",
]
