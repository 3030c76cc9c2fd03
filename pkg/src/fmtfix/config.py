"""Project configuration: a plain TOML file, no environment lookups.

Example:

    ruleset = "checkstyle.xml"
    corpus = "src/**/*.java"
    dataset_dir = "dataset"
    model_dir = "models"
    seed = 42

    [window]
    context_lines = 5
    column_tokens = 10
    line_tokens_before = 2
    line_tokens_after = 13

    [beam]
    width = 5

    [generate]
    errors = 1000
    batch_size = 500

    [train]
    attention = "general"
    layers = 1
    units = 64
    embedding = 64
    iterations = 1000
"""

from __future__ import annotations

import glob
from dataclasses import dataclass, field
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .encoding import WindowParams
from .injection import GenerationConfig
from .model import BeamParams, Hyperparams


class ProjectConfigError(Exception):
    pass


@dataclass
class ProjectConfig:
    base_dir: Path
    ruleset_path: Path
    corpus_glob: str
    dataset_dir: Path
    model_dir: Path
    seed: int
    window: WindowParams
    beam: BeamParams
    generate: dict = field(default_factory=dict)
    train: dict = field(default_factory=dict)

    @classmethod
    def load(cls, path: Path | str) -> "ProjectConfig":
        path = Path(path)
        try:
            data = tomllib.loads(path.read_text(encoding="utf-8"))
        except tomllib.TOMLDecodeError as exc:
            raise ProjectConfigError(f"bad config file {path}: {exc}") from exc
        base = path.parent
        try:
            ruleset = base / data["ruleset"]
            corpus = data["corpus"]
        except KeyError as exc:
            raise ProjectConfigError(f"config is missing the {exc.args[0]!r} key") from exc
        if not ruleset.exists():
            raise ProjectConfigError(f"ruleset file not found: {ruleset}")
        window_cfg = data.get("window", {})
        try:
            window = WindowParams(
                context_lines=window_cfg.get("context_lines", 5),
                tag_tokens=window_cfg.get("column_tokens", 10),
                line_tokens_before=window_cfg.get("line_tokens_before", 2),
                line_tokens_after=window_cfg.get("line_tokens_after", 13))
            beam = BeamParams(width=data.get("beam", {}).get("width", 5))
        except ValueError as exc:
            raise ProjectConfigError(str(exc)) from exc
        return cls(
            base_dir=base,
            ruleset_path=ruleset,
            corpus_glob=corpus,
            dataset_dir=base / data.get("dataset_dir", "dataset"),
            model_dir=base / data.get("model_dir", "models"),
            seed=int(data.get("seed", 0)),
            window=window,
            beam=beam,
            generate=data.get("generate", {}),
            train=data.get("train", {}),
        )

    def corpus_files(self) -> list[tuple[str, str]]:
        pattern = str(self.base_dir / self.corpus_glob)
        paths = sorted(glob.glob(pattern, recursive=True))
        if not paths:
            raise ProjectConfigError(f"no corpus files match {pattern}")
        files = []
        for p in paths:
            text = Path(p).read_text(encoding="utf-8")
            files.append((p, text.replace("\r\n", "\n")))
        return files

    def generation_config(self, protocol: str) -> GenerationConfig:
        return GenerationConfig(
            number_of_errors=int(self.generate.get("errors", 1000)),
            batch_size=int(self.generate.get("batch_size", 500)),
            protocol=protocol,
            seed=self.seed,
        )

    def hyperparams(self, paper_scale: bool = False, protocol: str = "random") -> Hyperparams:
        if paper_scale:
            from .model import paper_scale_hyperparams
            return paper_scale_hyperparams(protocol, seed=self.seed)
        t = self.train
        return Hyperparams(
            attention=t.get("attention", "general"),
            layers=int(t.get("layers", 1)),
            units=int(t.get("units", 64)),
            embedding=int(t.get("embedding", 64)),
            batch_size=int(t.get("batch_size", 32)),
            iterations=int(t.get("iterations", 1000)),
            learning_rate=float(t.get("learning_rate", 1.0)),
            lr_decay=float(t.get("lr_decay", 0.002)),
            seed=self.seed,
        )
