"""Pipeline configuration: an INI file with one section per stage.

Every output artifact embeds the config hash so results can be traced back
to the exact settings that produced them. Stage seeds default to the global
seed when not set.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from pathlib import Path

from satdkit.classify.model import ClassifierConfig
from satdkit.util import sha256_of


@dataclass
class PipelineConfig:
    root: Path
    out_dir: Path
    extensions: set[str] = field(default_factory=lambda: {"java"})
    seed: int = 7
    stage_seeds: dict[str, int] = field(default_factory=dict)
    classifier: ClassifierConfig = field(default_factory=ClassifierConfig)
    scopes: list[str] = field(default_factory=lambda: ["2", "10", "20", "full"])
    window: str = "following"
    sample_n: int = 10
    n_folds: int = 10
    annotators: list[str] = field(default_factory=lambda: ["ann-a", "ann-b"])
    phase: int = 1
    synth_n: int = 400
    disagree_rate: float = 0.08
    host: str = "127.0.0.1"
    port: int = 8765
    raw: dict = field(default_factory=dict)

    def seed_for(self, stage: str) -> int:
        return self.stage_seeds.get(stage, self.seed)

    @property
    def config_hash(self) -> str:
        return sha256_of(self.raw)[:16]

    @classmethod
    def from_file(cls, path: str | Path) -> "PipelineConfig":
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"config file not found: {path}")
        parser = configparser.ConfigParser()
        parser.read(path)
        base = path.parent

        def get(section: str, key: str, default):
            if parser.has_option(section, key):
                return parser.get(section, key)
            return default

        raw = {s: dict(parser.items(s)) for s in parser.sections()}
        seed = int(get("seeds", "global", 7))
        stage_seeds = {
            k: int(v) for k, v in raw.get("seeds", {}).items() if k != "global"
        }
        classifier = ClassifierConfig(
            seed=int(get("classifier", "seed", seed)),
            c=float(get("classifier", "c", 16.0)),
            max_iter=int(get("classifier", "max_iter", 500)),
            ngram_max=int(get("classifier", "ngram_max", 2)),
            min_df=int(get("classifier", "min_df", 1)),
        )
        return cls(
            root=(base / get("corpus", "root", ".")).resolve(),
            out_dir=(base / get("output", "dir", "out")).resolve(),
            extensions={e.strip() for e in str(get("corpus", "extensions", "java")).split(",")},
            seed=seed,
            stage_seeds=stage_seeds,
            classifier=classifier,
            scopes=[s.strip() for s in str(get("dataset", "scopes", "2,10,20,full")).split(",")],
            window=get("dataset", "window", "following"),
            sample_n=int(get("sampling", "n", 10)),
            n_folds=int(get("dataset", "n_folds", 10)),
            annotators=[a.strip() for a in str(get("annotation", "annotators", "ann-a,ann-b")).split(",")],
            phase=int(get("annotation", "phase", 1)),
            synth_n=int(get("pipeline", "synth_n", 400)),
            disagree_rate=float(get("pipeline", "disagree_rate", 0.08)),
            host=get("server", "host", "127.0.0.1"),
            port=int(get("server", "port", 8765)),
            raw=raw,
        )
