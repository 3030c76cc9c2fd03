"""End-to-end repair orchestration and the evaluation harness.

For a file with exactly one formatting violation: encode the tagged error
window, ask each trained model for a handful of beam candidates, map every
predicted formatting sequence back onto the window, re-render, re-check,
and hand back the passing candidate with the smallest line diff. Files are
classified into five mutually exclusive outcomes.
"""

from __future__ import annotations

import json
import statistics
import time
from dataclasses import dataclass, field

from .checker import BrokenFileError, Ruleset, Violation, check
from .diffs import diff_size
from .encoding import (ErrorWindow, IndentUnit, LocationError, WindowParams,
                       encode, extract_error_window, splice)
from .injection import ThreeGramCorpus
from .lexing import LexError, lex
from .model import (BeamParams, Seq2SeqModel, apply_formatting,
                    ngram_translate, predict_beam)

RANDOM = "random"
THREE_GRAMS = "3grams"
NGRAM_BASELINE = "ngram"

_SOURCE_PRIORITY = {THREE_GRAMS: 0, RANDOM: 1, NGRAM_BASELINE: 2}

REPAIRED_NO_ERROR = "repaired_no_error"
REPAIRED_NEW_ERRORS = "repaired_new_errors"
NOT_REPAIRED_SAME_ERROR = "not_repaired_same_error"
NOT_REPAIRED_SAME_PLUS_NEW = "not_repaired_same_plus_new"
BROKEN = "broken"

CATEGORIES = (REPAIRED_NO_ERROR, REPAIRED_NEW_ERRORS, NOT_REPAIRED_SAME_ERROR,
              NOT_REPAIRED_SAME_PLUS_NEW, BROKEN)


@dataclass
class RepairCandidate:
    text: str
    source_model: str          # "random" | "3grams" | "ngram"
    beam_rank: int             # 1-based
    score: float
    diff_lines: int = -1
    category: str | None = None

    def priority(self):
        return (_SOURCE_PRIORITY[self.source_model], self.beam_rank)


@dataclass
class RepairOutcome:
    category: str
    chosen: RepairCandidate | None
    elapsed: float
    rule: str
    candidates: list[RepairCandidate] = field(default_factory=list)
    passing_sources: frozenset = frozenset()

    @property
    def repaired(self) -> bool:
        return self.category == REPAIRED_NO_ERROR


def _anchor_token(stream, violation: Violation) -> int | None:
    """Index of the token a violation is attached to (None for file-level)."""
    if violation.rule == "NewlineAtEndOfFile":
        return None
    tokens = stream.tokens
    if not tokens:
        return None
    candidates = [i for i, t in enumerate(tokens) if t.line == violation.line]
    if not candidates:
        after = [i for i, t in enumerate(tokens) if t.line > violation.line]
        return after[0] if after else len(tokens) - 1
    if violation.column is None:
        return candidates[0]
    for i in candidates:
        t = tokens[i]
        if t.column <= violation.column < t.column + len(t.lexeme):
            return i
    return min(candidates, key=lambda i: abs(tokens[i].column - violation.column))


def _same_violation(original_anchor, original: Violation,
                    candidate_anchor, candidate: Violation) -> bool:
    if candidate.rule != original.rule:
        return False
    if original_anchor is None or candidate_anchor is None:
        return original_anchor == candidate_anchor
    return candidate_anchor == original_anchor


def verify_candidates(candidates: list[RepairCandidate], ruleset: Ruleset,
                      original: Violation, original_stream) -> dict[str, list[RepairCandidate]]:
    """Re-check every candidate and partition by outcome class."""
    partition: dict[str, list[RepairCandidate]] = {
        "passing": [], "new_error": [], "same_error": [],
        "same_plus_new": [], "broken": [],
    }
    orig_anchor = _anchor_token(original_stream, original)
    for cand in candidates:
        try:
            cand_stream = lex(cand.text)
            violations = check(cand.text, ruleset, original.file)
        except (BrokenFileError, LexError):
            cand.category = "broken"
            partition["broken"].append(cand)
            continue
        if not violations:
            cand.category = "passing"
            partition["passing"].append(cand)
            continue
        same = False
        fresh = False
        for v in violations:
            if _same_violation(orig_anchor, original,
                               _anchor_token(cand_stream, v), v):
                same = True
            else:
                fresh = True
        if same and fresh:
            cand.category = "same_plus_new"
        elif same:
            cand.category = "same_error"
        else:
            cand.category = "new_error"
        partition[cand.category].append(cand)
    return partition


def select_repair(passing: list[RepairCandidate], original: str) -> RepairCandidate:
    """Smallest diff wins; ties prefer the 3-gram model, then lower rank."""
    if not passing:
        raise ValueError("no passing candidate to select from")
    for cand in passing:
        if cand.diff_lines < 0:
            cand.diff_lines = diff_size(original, cand.text)
    return min(passing, key=lambda c: (c.diff_lines,) + c.priority())


def _candidate_texts(window: ErrorWindow, models: dict[str, Seq2SeqModel],
                     bp: BeamParams, baseline: ThreeGramCorpus | None) -> list[RepairCandidate]:
    seq = window.seq
    window_fmt = window.window_fmt()
    candidates: list[RepairCandidate] = []
    for source in (RANDOM, THREE_GRAMS):
        model = models.get(source)
        if model is None:
            continue
        for rank, beam in enumerate(predict_beam(model, window, bp), start=1):
            fmts = apply_formatting(window_fmt, list(beam.tokens))
            text = splice(seq, window.start, window.end, fmts)
            candidates.append(RepairCandidate(text, source, rank, beam.score))
    if baseline is not None:
        fmts = ngram_translate(window, baseline)
        text = splice(seq, window.start, window.end, fmts)
        candidates.append(RepairCandidate(text, NGRAM_BASELINE, 1, float("-inf")))
    return candidates


def repair_file(source: str, ruleset: Ruleset,
                models: dict[str, Seq2SeqModel],
                window_params: WindowParams = WindowParams(),
                beam_params: BeamParams = BeamParams(),
                indent: IndentUnit | None = None,
                baseline: ThreeGramCorpus | None = None,
                path: str = "<memory>") -> RepairOutcome:
    """Repair one single-violation file; returns the classified outcome."""
    try:
        violations = check(source, ruleset, path)
    except BrokenFileError:
        return RepairOutcome(BROKEN, None, 0.0, rule="", candidates=[])
    if len(violations) != 1:
        raise ValueError(f"repair expects exactly one violation, found {len(violations)}")
    violation = violations[0]

    started = time.perf_counter()
    stream = lex(source, path)
    seq = encode(stream, indent)
    try:
        window = extract_error_window(seq, violation, window_params)
    except LocationError:
        return RepairOutcome(NOT_REPAIRED_SAME_ERROR, None,
                             time.perf_counter() - started, violation.rule, [])
    candidates = _candidate_texts(window, models, beam_params, baseline)
    partition = verify_candidates(candidates, ruleset, violation, stream)
    passing = partition["passing"]
    elapsed = time.perf_counter() - started

    sources = frozenset(c.source_model for c in passing)
    if passing:
        chosen = select_repair(passing, source)
        return RepairOutcome(REPAIRED_NO_ERROR, chosen, elapsed, violation.rule,
                             candidates, sources)
    changed = [c for c in candidates if c.text != source]
    if not changed:
        return RepairOutcome(NOT_REPAIRED_SAME_ERROR, None, elapsed,
                             violation.rule, candidates, sources)
    best = max(changed,
               key=lambda c: (c.score, -c.priority()[0], -c.priority()[1]))
    category = {
        "new_error": REPAIRED_NEW_ERRORS,
        "same_error": NOT_REPAIRED_SAME_ERROR,
        "same_plus_new": NOT_REPAIRED_SAME_PLUS_NEW,
        "broken": BROKEN,
    }[best.category]
    return RepairOutcome(category, None, elapsed, violation.rule, candidates, sources)


# ---------------------------------------------------------------------------
# evaluation harness

@dataclass
class EvaluationReport:
    category_counts: dict[str, int]
    per_rule: dict[str, dict[str, int]]
    diff_percentiles: dict[str, float]     # keys "p5".."p95"
    exclusive_random: int
    exclusive_3gram: int
    both_models: int
    baseline_only: int
    mean_seconds: float
    median_seconds: float
    total: int

    def to_json(self) -> str:
        return json.dumps(self.__dict__, indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"evaluated errors: {self.total}"]
        for cat in CATEGORIES:
            n = self.category_counts.get(cat, 0)
            pct = 100.0 * n / self.total if self.total else 0.0
            lines.append(f"  {cat:28s} {n:6d}  ({pct:5.1f}%)")
        lines.append("per rule:")
        for rule in sorted(self.per_rule):
            row = self.per_rule[rule]
            total = sum(row.values())
            repaired = row.get(REPAIRED_NO_ERROR, 0)
            lines.append(f"  {rule:24s} {repaired:5d}/{total}")
        if self.diff_percentiles:
            p = self.diff_percentiles
            lines.append("diff size percentiles: " + ", ".join(
                f"{k}={p[k]:.0f}" for k in ("p5", "p25", "p50", "p75", "p95")))
        lines.append(f"exclusively random: {self.exclusive_random}, "
                     f"exclusively 3grams: {self.exclusive_3gram}, "
                     f"both: {self.both_models}")
        lines.append(f"prediction seconds per error: mean {self.mean_seconds:.3f}, "
                     f"median {self.median_seconds:.3f}")
        return "\n".join(lines)


def _percentile(values: list[float], q: float) -> float:
    """Linear-interpolation percentile (same convention as the plots)."""
    if not values:
        return 0.0
    data = sorted(values)
    if len(data) == 1:
        return float(data[0])
    rank = (len(data) - 1) * q / 100.0
    lo = int(rank)
    hi = min(lo + 1, len(data) - 1)
    frac = rank - lo
    return data[lo] * (1 - frac) + data[hi] * frac


_POOL_STATE: dict = {}


def _pool_init(state):
    _POOL_STATE.update(state)


def _pool_repair(item):
    path, text = item
    s = _POOL_STATE
    return repair_file(text, s["ruleset"], s["models"], s["window_params"],
                       s["beam_params"], s["indent"], s["baseline"], path)


def evaluate_corpus(error_files: list[tuple[str, str]], ruleset: Ruleset,
                    models: dict[str, Seq2SeqModel],
                    window_params: WindowParams = WindowParams(),
                    beam_params: BeamParams = BeamParams(),
                    indent: IndentUnit | None = None,
                    baseline: ThreeGramCorpus | None = None,
                    jobs: int = 1) -> tuple[EvaluationReport, list[RepairOutcome]]:
    """Repair every (path, text) error file and aggregate the outcomes.

    With jobs > 1, files are repaired by a process pool; results merge in
    input order, so the report is identical to a sequential run.
    """
    if jobs > 1 and len(error_files) > 1:
        import concurrent.futures as cf
        state = {"ruleset": ruleset, "models": models,
                 "window_params": window_params, "beam_params": beam_params,
                 "indent": indent, "baseline": baseline}
        with cf.ProcessPoolExecutor(max_workers=jobs, initializer=_pool_init,
                                    initargs=(state,)) as pool:
            outcomes = list(pool.map(_pool_repair, error_files, chunksize=4))
    else:
        outcomes = [repair_file(text, ruleset, models, window_params,
                                beam_params, indent, baseline, path)
                    for path, text in error_files]

    category_counts = {cat: 0 for cat in CATEGORIES}
    per_rule: dict[str, dict[str, int]] = {}
    diffs: list[float] = []
    seconds: list[float] = []
    excl_random = excl_3gram = both = baseline_only = 0
    for outcome in outcomes:
        category_counts[outcome.category] += 1
        rule = outcome.rule or "(broken)"
        per_rule.setdefault(rule, {})
        per_rule[rule][outcome.category] = per_rule[rule].get(outcome.category, 0) + 1
        if outcome.elapsed:
            seconds.append(outcome.elapsed)
        if outcome.repaired:
            diffs.append(float(outcome.chosen.diff_lines))
            has_random = RANDOM in outcome.passing_sources
            has_3gram = THREE_GRAMS in outcome.passing_sources
            if has_random and has_3gram:
                both += 1
            elif has_random:
                excl_random += 1
            elif has_3gram:
                excl_3gram += 1
            else:
                baseline_only += 1
    percentiles = {}
    if diffs:
        percentiles = {f"p{q}": _percentile(diffs, q) for q in (5, 25, 50, 75, 95)}
    report = EvaluationReport(
        category_counts=category_counts,
        per_rule=per_rule,
        diff_percentiles=percentiles,
        exclusive_random=excl_random,
        exclusive_3gram=excl_3gram,
        both_models=both,
        baseline_only=baseline_only,
        mean_seconds=statistics.fmean(seconds) if seconds else 0.0,
        median_seconds=statistics.median(seconds) if seconds else 0.0,
        total=len(outcomes),
    )
    return report, outcomes
