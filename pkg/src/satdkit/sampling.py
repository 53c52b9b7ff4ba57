"""Selection of an informative annotation subset from classifier predictions.

Two candidate pools: Q holds every triplet whose prediction list names more
than one debt type (the classifiers disagree about the category), and Q_hat
holds the |Q| highest-entropy triplets among the rest. The final selection is
a seeded uniform draw of function ids from the union.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from satdkit.classify.model import ClassifierModel
from satdkit.classify.predict import binary_entropy
from satdkit.labels import TDLabel


@dataclass
class Triplet:
    comment_id: str
    function_id: str
    clean_text: str
    predicted: list[TDLabel]  # P_i
    probabilities: dict[TDLabel, float] = field(default_factory=dict)
    entropy: float | None = None  # precomputed fallback when no models given

    def to_json(self) -> dict:
        return {
            "comment_id": self.comment_id,
            "function_id": self.function_id,
            "comment": self.clean_text,
            "predicted": [l.value for l in self.predicted],
            "probabilities": {k.value: v for k, v in self.probabilities.items()},
            "entropy": self.entropy,
        }

    @classmethod
    def from_json(cls, row: dict) -> "Triplet":
        return cls(
            comment_id=row["comment_id"],
            function_id=row["function_id"],
            clean_text=row.get("comment", ""),
            predicted=[TDLabel(l) for l in row.get("predicted", [])],
            probabilities={TDLabel(k): v for k, v in row.get("probabilities", {}).items()},
            entropy=row.get("entropy"),
        )


@dataclass
class RankedTriplet:
    triplet: Triplet
    entropy: float
    rank: int  # 0-based position in the descending entropy order


@dataclass
class SamplingResult:
    q: list[Triplet]
    q_hat: list[RankedTriplet]
    selected_functions: list[str]
    seed: int

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "selected_functions": self.selected_functions,
            "q": [t.comment_id for t in self.q],
            "q_hat": [
                {"comment_id": r.triplet.comment_id, "entropy": r.entropy, "rank": r.rank}
                for r in self.q_hat
            ],
        }


def _uncertainty(
    triplet: Triplet,
    models: dict[TDLabel, ClassifierModel] | None,
    binary_model: ClassifierModel | None,
) -> float:
    """Entropy of the head that routed this triplet.

    Mirrors the selection loop: the head is the classifier of the first (and
    for non-Q triplets only) predicted type. Triplets with an empty
    prediction list reached the pipeline through the binary detector, so its
    head is used for them.
    """
    if triplet.predicted:
        head = triplet.predicted[0]
        if models is not None and triplet.clean_text:
            return binary_entropy(models[head].predict_proba(triplet.clean_text))
        if head in triplet.probabilities:
            return binary_entropy(triplet.probabilities[head])
    else:
        if binary_model is not None and triplet.clean_text:
            return binary_entropy(binary_model.predict_proba(triplet.clean_text))
    if triplet.entropy is not None:
        return triplet.entropy
    raise ValueError(f"no entropy source for triplet {triplet.comment_id}")


def build_candidates(
    triplets: list[Triplet],
    models: dict[TDLabel, ClassifierModel] | None = None,
    binary_model: ClassifierModel | None = None,
) -> tuple[list[Triplet], list[RankedTriplet]]:
    """Split triplets into (Q, Q_hat).

    Q keeps input order; Q_hat is the top-|Q| of the remainder by descending
    entropy, ties broken by ascending comment_id for reproducibility.
    """
    q = [t for t in triplets if len(t.predicted) > 1]
    rest = [t for t in triplets if len(t.predicted) <= 1]
    scored = [(t, _uncertainty(t, models, binary_model)) for t in rest]
    scored.sort(key=lambda pair: (-pair[1], pair[0].comment_id))
    q_hat = [
        RankedTriplet(triplet=t, entropy=s, rank=i)
        for i, (t, s) in enumerate(scored[: len(q)])
    ]
    return q, q_hat


def sample_functions(
    q: list[Triplet], q_hat: list[RankedTriplet], n: int, seed: int = 0
) -> SamplingResult:
    """Seeded uniform draw (without replacement) over the distinct function
    ids of Q union Q_hat; n larger than the pool returns the whole pool."""
    if n < 0:
        raise ValueError("n must be >= 0")
    pool = sorted({t.function_id for t in q} | {r.triplet.function_id for r in q_hat})
    rng = random.Random(seed)
    if n >= len(pool):
        selected = list(pool)
    else:
        selected = sorted(rng.sample(pool, n))
    return SamplingResult(q=q, q_hat=q_hat, selected_functions=selected, seed=seed)
