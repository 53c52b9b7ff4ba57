"""Prediction records, the entropy uncertainty score, and the overlap report."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from satdkit.classify.model import ClassifierModel
from satdkit.labels import TD_TYPES, TDLabel

MEMBERSHIP_THRESHOLD = 0.5


def entropy(probabilities) -> float:
    """Shannon entropy (nats) of a discrete distribution; 0*ln(0) := 0."""
    p = np.asarray(probabilities, dtype=np.float64)
    if p.ndim != 1 or p.size == 0:
        raise ValueError("probabilities must be a non-empty vector")
    if np.any(p < 0):
        raise ValueError("probabilities must be non-negative")
    if abs(float(p.sum()) - 1.0) > 1e-9:
        raise ValueError(f"probabilities must sum to 1, got {float(p.sum())!r}")
    nz = p[p > 0]
    return float(-np.sum(nz * np.log(nz)))


def binary_entropy(p: float) -> float:
    return entropy([p, 1.0 - p])


@dataclass
class Prediction:
    probabilities: dict[TDLabel, float]  # positive-class probability per type head
    predicted: list[TDLabel] = field(default_factory=list)  # P_i, canonical order
    entropy: float = 0.0
    comment_id: str | None = None

    def to_json(self) -> dict:
        return {
            "comment_id": self.comment_id,
            "probabilities": {k.value: v for k, v in self.probabilities.items()},
            "predicted": [l.value for l in self.predicted],
            "entropy": self.entropy,
        }


def predict(
    models: dict[TDLabel, ClassifierModel],
    clean_text: str,
    binary_model: ClassifierModel | None = None,
    threshold: float = MEMBERSHIP_THRESHOLD,
    comment_id: str | None = None,
) -> Prediction:
    """Run the five type heads on a cleaned comment.

    The heads are independent, so a comment can land in several classes (or
    none). The entropy is taken from the binary head of the first predicted
    type; comments with an empty prediction set fall back to the SATD
    detector head when one is supplied, else to the most confident type head.
    """
    probs = {td: models[td].predict_proba(clean_text) for td in TD_TYPES}
    predicted = [td for td in TD_TYPES if probs[td] > threshold]
    if predicted:
        head_p = probs[predicted[0]]
    elif binary_model is not None:
        head_p = binary_model.predict_proba(clean_text)
    else:
        head_p = max(probs.values())
    return Prediction(
        probabilities=probs,
        predicted=predicted,
        entropy=binary_entropy(head_p),
        comment_id=comment_id,
    )


def overlap_report(predictions: list[Prediction]) -> np.ndarray:
    """5x5 co-prediction matrix over the debt types (canonical order).

    Cell (X, Y) with X != Y is the fraction of comments predicted as both X
    and Y among those predicted as X; the diagonal is 1 wherever X was
    predicted at all. Rows with no X predictions are zero.
    """
    if not predictions:
        raise ValueError("need at least one prediction")
    k = len(TD_TYPES)
    matrix = np.zeros((k, k), dtype=np.float64)
    sets = [frozenset(p.predicted) for p in predictions]
    for i, x in enumerate(TD_TYPES):
        with_x = [s for s in sets if x in s]
        if not with_x:
            continue
        for j, y in enumerate(TD_TYPES):
            if i == j:
                matrix[i, j] = 1.0
            else:
                matrix[i, j] = sum(1 for s in with_x if y in s) / len(with_x)
    return matrix
