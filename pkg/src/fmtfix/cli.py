"""Command-line interface.

Subcommands:
  check     run the rule engine over files and print a report
  generate  build a training dataset by seeding errors into clean files
  train     train a repair model on a generated dataset
  repair    predict, verify, and apply a repair for a single-error file
  eval      run the repair pipeline over an error corpus and report metrics
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import checker as checker_mod
from .checker import BrokenFileError, ConfigError, check, format_report, parse_ruleset
from .config import ProjectConfig, ProjectConfigError
from .diffs import unified_diff
from .encoding import detect_indent_unit, encode
from .injection import (ExhaustionError, GenerationConfig, generate_training_set,
                        load_dataset_texts, mine_3grams, save_dataset)
from .lexing import lex, normalize_newlines
from .model import build_vocab, load_model, save_model, train
from .pipeline import (RANDOM, REPAIRED_NO_ERROR, THREE_GRAMS, evaluate_corpus,
                       repair_file)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_NOT_REPAIRED = 2
EXIT_USAGE = 64
EXIT_INTERNAL = 70


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit2(message)


class SystemExit2(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fmtfix",
                     description="Learn formatting conventions; repair violations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="check files against a ruleset")
    p_check.add_argument("files", nargs="+")
    p_check.add_argument("--ruleset", required=True)
    p_check.add_argument("--format", choices=("text", "json"), default="text")

    p_gen = sub.add_parser("generate", help="generate a training dataset")
    p_gen.add_argument("--config", required=True)
    p_gen.add_argument("--protocol", choices=(RANDOM, THREE_GRAMS), required=True)

    p_train = sub.add_parser("train", help="train a repair model")
    p_train.add_argument("--config", required=True)
    p_train.add_argument("--protocol", choices=(RANDOM, THREE_GRAMS), required=True)
    p_train.add_argument("--paper-scale", action="store_true",
                         help="use the published large configuration")

    p_rep = sub.add_parser("repair", help="repair a single-error file")
    p_rep.add_argument("file")
    p_rep.add_argument("--config", required=True)
    mode = p_rep.add_mutually_exclusive_group()
    mode.add_argument("--in-place", action="store_true")
    mode.add_argument("--diff", action="store_true")
    p_rep.add_argument("--baseline", action="store_true",
                       help="pool the n-gram baseline's candidate as well")

    p_eval = sub.add_parser("eval", help="evaluate the pipeline on an error corpus")
    p_eval.add_argument("--config", required=True)
    p_eval.add_argument("--corpus", required=True, help="directory of single-error files")
    p_eval.add_argument("--baseline", action="store_true")
    p_eval.add_argument("--report", default=None, help="where to write report JSON")
    p_eval.add_argument("--jobs", type=int, default=1,
                        help="worker bound for candidate verification")
    return parser


def _load_ruleset(path: str):
    return parse_ruleset(Path(path).read_text(encoding="utf-8"))


def cmd_check(args) -> int:
    ruleset = _load_ruleset(args.ruleset)
    any_violations = False
    all_violations = []
    for name in args.files:
        text, _ = normalize_newlines(Path(name).read_text(encoding="utf-8"))
        try:
            violations = check(text, ruleset, path=name)
        except BrokenFileError as exc:
            print(f"[ERROR] {name}:{exc.line}:{exc.column}: {exc.reason} [Broken]")
            any_violations = True
            continue
        all_violations.extend(violations)
        if args.format == "text":
            for v in violations:
                print(format_report(v))
        any_violations = any_violations or bool(violations)
    if args.format == "json":
        print(checker_mod.violations_to_json(all_violations))
    return EXIT_VIOLATIONS if any_violations else EXIT_OK


def cmd_generate(args) -> int:
    cfg = ProjectConfig.load(args.config)
    ruleset = _load_ruleset(cfg.ruleset_path)
    files = cfg.corpus_files()
    gen_cfg = cfg.generation_config(args.protocol)
    pairs = generate_training_set(ruleset, files, gen_cfg, cfg.window)
    save_dataset(pairs, cfg.dataset_dir, args.protocol)
    print(f"wrote {len(pairs)} training pairs to {cfg.dataset_dir / args.protocol}")
    return EXIT_OK


def cmd_train(args) -> int:
    cfg = ProjectConfig.load(args.config)
    ruleset = _load_ruleset(cfg.ruleset_path)
    rows = load_dataset_texts(cfg.dataset_dir, args.protocol)
    if not rows:
        print(f"no dataset under {cfg.dataset_dir / args.protocol}; "
              "run generate first", file=sys.stderr)
        return EXIT_USAGE
    streams = [lex(text, path) for path, text in cfg.corpus_files()]
    indent = detect_indent_unit(streams)
    hp = cfg.hyperparams(paper_scale=args.paper_scale, protocol=args.protocol)
    vocab = build_vocab(rows, ruleset, indent.width)

    def log(iteration, val_loss, val_acc):
        print(f"iteration {iteration}: validation loss {val_loss:.4f}, "
              f"token accuracy {val_acc:.3f}")

    model = train(rows, hp, vocab=vocab, log=log)
    cfg.model_dir.mkdir(parents=True, exist_ok=True)
    out = cfg.model_dir / f"{args.protocol}.crpr"
    save_model(model, out)
    print(f"saved model to {out}")
    return EXIT_OK


def _load_models(cfg: ProjectConfig) -> dict:
    models = {}
    for protocol in (RANDOM, THREE_GRAMS):
        path = cfg.model_dir / f"{protocol}.crpr"
        if path.exists():
            models[protocol] = load_model(path)
    if not models:
        raise ProjectConfigError(f"no trained models under {cfg.model_dir}; "
                                 "run train first")
    return models


def _baseline_corpus(cfg: ProjectConfig, indent):
    seqs = [encode(lex(text, path), indent) for path, text in cfg.corpus_files()]
    return mine_3grams(seqs)


def cmd_repair(args) -> int:
    cfg = ProjectConfig.load(args.config)
    ruleset = _load_ruleset(cfg.ruleset_path)
    models = _load_models(cfg)
    raw = Path(args.file).read_text(encoding="utf-8")
    text, newline = normalize_newlines(raw)
    streams = [lex(t, p) for p, t in cfg.corpus_files()]
    indent = detect_indent_unit(streams)
    baseline = _baseline_corpus(cfg, indent) if args.baseline else None

    violations = check(text, ruleset, path=args.file)
    if not violations:
        print("no violations; nothing to repair")
        return EXIT_OK
    if len(violations) > 1:
        print(f"{len(violations)} violations found; repair handles single-error "
              "files only", file=sys.stderr)
        return EXIT_NOT_REPAIRED

    outcome = repair_file(text, ruleset, models, cfg.window, cfg.beam,
                          indent, baseline, path=args.file)
    if not outcome.repaired:
        print(f"not repaired ({outcome.category})", file=sys.stderr)
        return EXIT_NOT_REPAIRED
    repaired = outcome.chosen.text
    if args.in_place:
        output = repaired.replace("\n", newline) if newline != "\n" else repaired
        Path(args.file).write_text(output, encoding="utf-8")
        print(f"repaired {args.file} "
              f"({outcome.chosen.source_model} beam {outcome.chosen.beam_rank}, "
              f"diff {outcome.chosen.diff_lines} lines)")
    elif args.diff:
        sys.stdout.write(unified_diff(text, repaired, args.file, args.file))
    else:
        sys.stdout.write(repaired)
    return EXIT_OK


def cmd_eval(args) -> int:
    cfg = ProjectConfig.load(args.config)
    ruleset = _load_ruleset(cfg.ruleset_path)
    models = _load_models(cfg)
    corpus_dir = Path(args.corpus)
    error_files = []
    for path in sorted(corpus_dir.rglob("*.java")):
        text, _ = normalize_newlines(path.read_text(encoding="utf-8"))
        error_files.append((str(path), text))
    if not error_files:
        print(f"no .java files under {corpus_dir}", file=sys.stderr)
        return EXIT_USAGE
    streams = [lex(t, p) for p, t in cfg.corpus_files()]
    indent = detect_indent_unit(streams)
    baseline = _baseline_corpus(cfg, indent) if args.baseline else None
    report, _ = evaluate_corpus(error_files, ruleset, models, cfg.window,
                                cfg.beam, indent, baseline, jobs=args.jobs)
    print(report.to_text())
    if args.report:
        Path(args.report).write_text(report.to_json() + "\n", encoding="utf-8")
        print(f"wrote {args.report}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        handler = {
            "check": cmd_check,
            "generate": cmd_generate,
            "train": cmd_train,
            "repair": cmd_repair,
            "eval": cmd_eval,
        }[args.command]
        return handler(args)
    except (ConfigError, ProjectConfigError, ExhaustionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenFileError as exc:
        print(f"error: file cannot be parsed: {exc}", file=sys.stderr)
        return EXIT_NOT_REPAIRED
    except Exception as exc:  # internal failure
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
