"""Input/output vocabularies for the repair model.

The input side covers abstract code tokens, the whole formatting-token
vocabulary, one tag pair per configured rule, and the specials. The output
side is formatting tokens plus specials only, which keeps it around three
dozen entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..encoding import formatting_vocabulary

PAD, BOS, EOS, UNK = 0, 1, 2, 3
SPECIALS = ("<pad>", "<s>", "</s>", "<unk>")


@dataclass(frozen=True)
class Vocabulary:
    input_tokens: tuple[str, ...]
    output_tokens: tuple[str, ...]
    _input_index: dict = field(default_factory=dict, compare=False, repr=False)
    _output_index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._input_index.update({t: i for i, t in enumerate(self.input_tokens)})
        self._output_index.update({t: i for i, t in enumerate(self.output_tokens)})

    @property
    def input_size(self) -> int:
        return len(self.input_tokens)

    @property
    def output_size(self) -> int:
        return len(self.output_tokens)

    def encode_input(self, tokens: list[str]) -> list[int]:
        idx = self._input_index
        return [idx.get(t, UNK) for t in tokens]

    def encode_output(self, tokens: list[str]) -> list[int]:
        idx = self._output_index
        return [idx.get(t, UNK) for t in tokens]

    def decode_output(self, ids: list[int]) -> list[str]:
        return [self.output_tokens[i] for i in ids]


def build_vocab(dataset, ruleset, indent_width: int = 4) -> Vocabulary:
    """Deterministic vocabulary over a dataset and a ruleset's tag pairs.

    ``dataset`` holds TrainingPair objects or (input tokens, target tokens)
    rows. Formatting tokens are enumerated from the caps rather than
    observed, so the output alphabet is closed.
    """
    fmt_texts = {t.text for t in formatting_vocabulary(indent_width)}
    tags = set()
    for rule in ruleset.rule_names():
        tags.add(f"<{rule}>")
        tags.add(f"</{rule}>")
    observed: set[str] = set()
    for row in dataset:
        tokens = row.input_tokens if hasattr(row, "input_tokens") else row[0]
        observed.update(tokens)
    java_texts = {t for t in observed
                  if t not in fmt_texts and not (t.startswith("<") and t.endswith(">"))}
    input_tokens = SPECIALS + tuple(sorted(java_texts)) + \
        tuple(sorted(fmt_texts)) + tuple(sorted(tags))
    output_tokens = SPECIALS + tuple(sorted(fmt_texts))
    return Vocabulary(input_tokens, output_tokens)
