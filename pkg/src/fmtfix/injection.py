"""Training-data generation by seeding single formatting errors.

Two protocols modify clean files:

- random: insert or delete one whitespace character at a legal site
  (insertions next to any token; deletions next to punctuation/operators or
  inside an indentation run of two or more characters);
- 3-gram: replace one formatting token with one drawn from the project's
  (code token, formatting token, code token) statistics, weighted by
  frequency.

A batch loop mutates files in groups, re-checks each batch, and keeps only
files with exactly one formatting violation. Every batch item draws its own
RNG stream from (seed, batch, item), so generation order never changes the
result.
"""

from __future__ import annotations

import hashlib
import json
import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from .checker import BrokenFileError, Ruleset, Violation, check
from .encoding import (AbstractSequence, AlignmentError, ErrorWindow,
                       FormattingToken, IndentUnit, WindowParams,
                       align_target_window, detect_indent_unit, encode,
                       extract_error_window, splice)
from .lexing import PUNCTUATION, TokenKind, lex, token_offsets


class NoSiteError(Exception):
    pass


class NoMatchError(Exception):
    pass


class ExhaustionError(Exception):
    pass


def derive_rng(*parts) -> random.Random:
    """Deterministic, platform-independent RNG stream for a seed path."""
    key = ":".join(str(p) for p in parts).encode()
    digest = hashlib.blake2b(key, digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "little"))


# ---------------------------------------------------------------------------
# random protocol

@dataclass(frozen=True)
class Edit:
    kind: str      # "insert" | "delete"
    offset: int    # character offset in the file text
    char: str      # the inserted or deleted character

    def apply(self, text: str) -> str:
        if self.kind == "insert":
            return text[:self.offset] + self.char + text[self.offset:]
        return text[:self.offset] + text[self.offset + 1:]

    def describe(self) -> str:
        shown = {" ": "space", "\t": "tab", "\n": "newline"}[self.char]
        return f"{self.kind} {shown} at offset {self.offset}"


def _merges_tokens(prev_lexeme: str, next_lexeme: str) -> bool:
    """Would the two lexemes lex differently if made adjacent?"""
    try:
        stream = lex(prev_lexeme + next_lexeme)
    except Exception:
        return True
    lexemes = [t.lexeme for t in stream.tokens]
    return lexemes != [prev_lexeme, next_lexeme]


def enumerate_edits(text: str, indent: IndentUnit | None = None) -> list[Edit]:
    """Every legal single-character whitespace edit, de-duplicated by result."""
    stream = lex(text)
    if not stream.items:
        return []
    if indent is None:
        indent = detect_indent_unit([stream])
    offsets = token_offsets(stream)
    tokens = stream.tokens
    edits: dict[tuple, Edit] = {}

    def add(edit: Edit):
        key = (edit.kind, edit.offset, edit.char)
        if key not in edits:
            edits[key] = edit

    gaps: list[tuple[int, int, int | None, int | None]] = []
    first_start = offsets[0][0]
    gaps.append((0, first_start, None, 0))
    for i in range(len(tokens)):
        gap_start = offsets[i][1]
        gap_end = offsets[i + 1][0] if i + 1 < len(tokens) else len(text)
        gaps.append((gap_start, gap_end, i, i + 1 if i + 1 < len(tokens) else None))

    for gap_start, gap_end, prev_idx, next_idx in gaps:
        gap_text = text[gap_start:gap_end]
        # insertions: immediately after the previous / before the next token
        for ch in (" ", "\t", "\n"):
            if prev_idx is not None:
                add(Edit("insert", gap_start, ch))
            if next_idx is not None:
                add(Edit("insert", gap_end, ch))
        if not gap_text:
            continue
        prev_tok = tokens[prev_idx] if prev_idx is not None else None
        next_tok = tokens[next_idx] if next_idx is not None else None
        near_punct = any(
            t is not None and t.kind is TokenKind.SEPARATOR and t.lexeme in PUNCTUATION
            for t in (prev_tok, next_tok))
        near_operator = any(
            t is not None and t.kind is TokenKind.OPERATOR
            for t in (prev_tok, next_tok))
        run_positions: set[int] = set()
        run_start = 0
        for k in range(len(gap_text) + 1):
            if k == len(gap_text) or gap_text[k] != gap_text[run_start]:
                if k - run_start >= 2 and gap_text[run_start] == indent.char:
                    run_positions.update(range(run_start, k))
                run_start = k
        for k, ch in enumerate(gap_text):
            if not (near_punct or near_operator or k in run_positions):
                continue
            if len(gap_text) == 1 and prev_tok is not None and next_tok is not None \
                    and _merges_tokens(prev_tok.lexeme, next_tok.lexeme):
                continue
            add(Edit("delete", gap_start + k, ch))

    return sorted(edits.values(), key=lambda e: (e.offset, e.kind, e.char))


def inject_random(text: str, rng: random.Random,
                  indent: IndentUnit | None = None) -> tuple[str, str]:
    """Apply one random legal whitespace edit; returns (mutated text, log)."""
    edits = enumerate_edits(text, indent)
    if not edits:
        raise NoSiteError("no legal edit site in file")
    edit = rng.choice(edits)
    return edit.apply(text), edit.describe()


# ---------------------------------------------------------------------------
# 3-gram protocol

@dataclass(frozen=True)
class ThreeGram:
    left: str
    fmt: FormattingToken
    right: str


@dataclass
class ThreeGramCorpus:
    counts: Counter = field(default_factory=Counter)
    index: dict = field(default_factory=lambda: defaultdict(list))

    def add(self, gram: ThreeGram, count: int = 1):
        self.counts[gram] += count

    def freeze(self):
        index = defaultdict(list)
        for gram in sorted(self.counts, key=lambda g: (g.left, g.right, g.fmt.text)):
            index[(gram.left, gram.right)].append((gram.fmt, self.counts[gram]))
        self.index = index
        return self

    def total(self) -> int:
        return sum(self.counts.values())

    def alternatives(self, left: str, right: str) -> list[tuple[FormattingToken, int]]:
        return self.index.get((left, right), [])

    def modal(self, left: str, right: str) -> FormattingToken | None:
        """Most frequent token for a context; ties break lexicographically."""
        options = self.alternatives(left, right)
        if not options:
            return None
        return min(options, key=lambda item: (-item[1], item[0].text))[0]


def mine_3grams(corpus: list[AbstractSequence]) -> ThreeGramCorpus:
    """Count every (code, formatting, code) triple in every sequence."""
    out = ThreeGramCorpus()
    for seq in corpus:
        for i in range(len(seq) - 1):
            out.add(ThreeGram(seq.java[i], seq.fmt[i], seq.java[i + 1]))
    return out.freeze()


def sample_replacement(corpus: ThreeGramCorpus, left: str, right: str,
                       rng: random.Random) -> FormattingToken | None:
    """Draw a formatting token for a context, proportionally to frequency."""
    options = corpus.alternatives(left, right)
    if not options:
        return None
    total = sum(count for _, count in options)
    pick = rng.randrange(total)
    acc = 0
    for fmt, count in options:
        acc += count
        if pick < acc:
            return fmt
    return options[-1][0]


RESAMPLE_LIMIT = 8


def inject_3gram(text: str, corpus: ThreeGramCorpus, rng: random.Random,
                 indent: IndentUnit | None = None) -> tuple[str, str]:
    """Replace one formatting token by a frequency-weighted corpus draw."""
    seq = encode(lex(text), indent)
    return inject_3gram_seq(seq, corpus, rng)


def inject_3gram_seq(seq: AbstractSequence, corpus: ThreeGramCorpus,
                     rng: random.Random) -> tuple[str, str]:
    n_positions = len(seq) - 1
    if n_positions <= 0:
        raise NoMatchError("file too short for 3-gram replacement")
    order = list(range(n_positions))
    rng.shuffle(order)
    matched_any = False
    for pos in order:
        left, right = seq.java[pos], seq.java[pos + 1]
        if not corpus.alternatives(left, right):
            continue
        matched_any = True
        original = seq.fmt[pos]
        replacement = None
        for _ in range(RESAMPLE_LIMIT):
            candidate = sample_replacement(corpus, left, right, rng)
            if candidate != original:
                replacement = candidate
                break
        if replacement is None:
            continue  # the context is forced; skip this position
        mutated = splice(seq, pos, pos, [replacement])
        log = (f"replace {original.text} with {replacement.text} "
               f"between {left!r} and {right!r} at pair {pos}")
        return mutated, log
    if matched_any:
        raise NoMatchError("every matching context is forced to its original token")
    raise NoMatchError("no corpus entry matches any position in the file")


# ---------------------------------------------------------------------------
# batch generation

@dataclass(frozen=True)
class GenerationConfig:
    number_of_errors: int = 1000
    batch_size: int = 500
    protocol: str = "random"        # "random" | "3grams"
    seed: int = 0

    def __post_init__(self):
        if self.number_of_errors < 1 or self.batch_size < 1:
            raise ValueError("number_of_errors and batch_size must be positive")
        if self.protocol not in ("random", "3grams"):
            raise ValueError(f"unknown protocol {self.protocol!r}")


@dataclass(frozen=True)
class TrainingPair:
    err_file: str
    orig_file: str
    violation: Violation
    window: ErrorWindow
    target: tuple[FormattingToken, ...]
    mutation_log: str
    seed_path: str

    @property
    def input_tokens(self) -> list[str]:
        return self.window.input_tokens()

    @property
    def target_texts(self) -> list[str]:
        return [t.text for t in self.target]


WATCHDOG_BATCHES = 50


def generate_training_set(ruleset: Ruleset, files: list[tuple[str, str]],
                          cfg: GenerationConfig,
                          window_params: WindowParams | None = None,
                          indent: IndentUnit | None = None) -> list[TrainingPair]:
    """Algorithm: batches of mutated files, filtered to single-violation ones.

    ``files`` is a list of (path, clean text) pairs; every file must be
    violation-free under ``ruleset``.
    """
    if not files:
        raise ValueError("empty file corpus")
    params = window_params or WindowParams()
    streams = {}
    seqs = {}
    for path, text in files:
        violations = check(text, ruleset, path)
        if violations:
            raise ValueError(f"corpus file {path} is not violation-free: "
                             f"{violations[0].rule} at line {violations[0].line}")
        streams[path] = lex(text, path)
    if indent is None:
        indent = detect_indent_unit(list(streams.values()))
    for path, text in files:
        seqs[path] = encode(streams[path], indent)

    corpus = mine_3grams(list(seqs.values())) if cfg.protocol == "3grams" else None
    edit_cache: dict[str, list[Edit]] = {}
    if cfg.protocol == "random":
        for path, text in files:
            edit_cache[path] = enumerate_edits(text, indent)

    pairs: list[TrainingPair] = []
    batch_index = 0
    idle_batches = 0
    while len(pairs) < cfg.number_of_errors:
        batch: list[tuple[str, str, str, str]] = []  # path, orig, mutated, log
        for item_index in range(cfg.batch_size):
            rng = derive_rng(cfg.seed, batch_index, item_index)
            path, text = files[rng.randrange(len(files))]
            try:
                if cfg.protocol == "random":
                    edits = edit_cache[path]
                    if not edits:
                        raise NoSiteError(path)
                    edit = rng.choice(edits)
                    mutated, log = edit.apply(text), edit.describe()
                else:
                    mutated, log = inject_3gram_seq(seqs[path], corpus, rng)
            except (NoSiteError, NoMatchError):
                continue
            batch.append((path, text, mutated,
                          f"{log} [seed {cfg.seed}/{batch_index}/{item_index}]"))

        accepted_before = len(pairs)
        for path, orig_text, err_text, log in batch:
            if len(pairs) >= cfg.number_of_errors:
                break
            try:
                violations = check(err_text, ruleset, path)
            except BrokenFileError:
                continue
            if len(violations) != 1:
                continue
            pair = _build_pair(path, orig_text, err_text, violations[0], log,
                               params, indent, seqs[path])
            if pair is not None:
                pairs.append(pair)
        idle_batches = idle_batches + 1 if len(pairs) == accepted_before else 0
        if idle_batches >= WATCHDOG_BATCHES:
            raise ExhaustionError(
                f"{WATCHDOG_BATCHES} consecutive batches produced no usable pair")
        batch_index += 1
    return pairs


def _build_pair(path, orig_text, err_text, violation, log, params, indent,
                orig_seq) -> TrainingPair | None:
    from .encoding import LocationError
    try:
        err_seq = encode(lex(err_text, path), indent)
        window = extract_error_window(err_seq, violation, params)
        target = align_target_window(orig_seq, window)
    except (AlignmentError, LocationError):
        return None
    return TrainingPair(err_text, orig_text, violation, window,
                        tuple(target), log, log.rsplit("[seed ", 1)[-1].rstrip("]"))


# ---------------------------------------------------------------------------
# dataset persistence

def save_dataset(pairs: list[TrainingPair], root: Path | str, protocol: str):
    """dataset/<protocol>/<id>/{err.java,orig.java,meta.json,input.txt,target.txt}"""
    base = Path(root) / protocol
    base.mkdir(parents=True, exist_ok=True)
    for i, pair in enumerate(pairs):
        d = base / f"{i:05d}"
        d.mkdir(exist_ok=True)
        (d / "err.java").write_text(pair.err_file, encoding="utf-8")
        (d / "orig.java").write_text(pair.orig_file, encoding="utf-8")
        (d / "input.txt").write_text(" ".join(pair.input_tokens) + "\n", encoding="utf-8")
        (d / "target.txt").write_text(" ".join(pair.target_texts) + "\n", encoding="utf-8")
        v = pair.violation
        meta = {
            "violation": {"file": v.file, "line": v.line, "column": v.column,
                          "rule": v.rule, "message": v.message},
            "mutation_log": pair.mutation_log,
            "seed_path": pair.seed_path,
            "window": {"start": pair.window.start, "end": pair.window.end,
                       "tag_open": pair.window.tag_open,
                       "tag_close": pair.window.tag_close},
        }
        (d / "meta.json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n",
                                     encoding="utf-8")


def load_dataset_texts(root: Path | str, protocol: str) -> list[tuple[list[str], list[str]]]:
    """Load (input tokens, target tokens) rows from a saved dataset tree."""
    base = Path(root) / protocol
    rows = []
    for d in sorted(base.iterdir()):
        if not d.is_dir():
            continue
        inp = (d / "input.txt").read_text(encoding="utf-8").split()
        tgt = (d / "target.txt").read_text(encoding="utf-8").split()
        rows.append((inp, tgt))
    return rows
