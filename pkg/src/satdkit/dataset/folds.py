"""Cross-project validation folds.

Projects are assigned whole to folds so no fold ever sees training and test
records from the same project. With exactly as many projects as folds each
project gets its own fold; with more, a greedy largest-first packing keeps
record counts balanced.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass


@dataclass
class FoldSplit:
    project_to_fold: dict[str, int]
    n_folds: int

    def fold_of(self, project: str) -> int:
        return self.project_to_fold[project]

    def to_json(self) -> dict:
        return {p: f for p, f in sorted(self.project_to_fold.items())}

    @classmethod
    def from_json(cls, blob: dict) -> "FoldSplit":
        mapping = {p: int(f) for p, f in blob.items()}
        return cls(project_to_fold=mapping, n_folds=max(mapping.values()) + 1 if mapping else 0)


def cross_project_folds(records, n_folds: int = 10, seed: int = 0) -> FoldSplit:
    """Assign each record's project to one of n_folds folds.

    records: anything with a .project attribute or a "project" dict key.
    Greedy size balancing (largest project first into the lightest fold)
    when there are more projects than folds; errors when there are fewer.
    """
    counts: Counter[str] = Counter()
    for r in records:
        project = r["project"] if isinstance(r, dict) else r.project
        counts[project] += 1
    projects = sorted(counts)
    if len(projects) < n_folds:
        raise ValueError(
            f"need at least {n_folds} projects for {n_folds} folds, got {len(projects)}"
        )
    rng = random.Random(seed)

    if len(projects) == n_folds:
        shuffled = list(projects)
        rng.shuffle(shuffled)
        return FoldSplit(
            project_to_fold={p: i for i, p in enumerate(shuffled)}, n_folds=n_folds
        )

    # seeded shuffle breaks ties among equal-sized projects, then largest first
    shuffled = list(projects)
    rng.shuffle(shuffled)
    shuffled.sort(key=lambda p: -counts[p])
    fold_sizes = [0] * n_folds
    mapping: dict[str, int] = {}
    for p in shuffled:
        fold = min(range(n_folds), key=lambda f: (fold_sizes[f], f))
        mapping[p] = fold
        fold_sizes[fold] += counts[p]
    return FoldSplit(project_to_fold=mapping, n_folds=n_folds)
