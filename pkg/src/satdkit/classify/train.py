"""Training entry points for the binary detector and the five type heads."""

from __future__ import annotations

from satdkit.classify.model import ClassifierConfig, ClassifierModel, fit_logistic
from satdkit.labels import TD_TYPES, TDLabel
from satdkit.util import sha256_of

BINARY_POSITIVE = "SATD"


def train_binary(
    records: list[tuple[str, bool]], config: ClassifierConfig | None = None
) -> ClassifierModel:
    """Detector head: positive iff the comment admits any type of debt."""
    config = config or ClassifierConfig()
    if not any(flag for _, flag in records) or all(flag for _, flag in records):
        raise ValueError("degenerate training set: need at least one positive and one negative")
    texts = [t for t, _ in records]
    targets = [flag for _, flag in records]
    dataset_hash = sha256_of([[t, bool(f)] for t, f in records])
    return fit_logistic(texts, targets, BINARY_POSITIVE, config, dataset_hash)


def train_type_classifiers(
    records: list[tuple[str, TDLabel]], config: ClassifierConfig | None = None
) -> dict[TDLabel, ClassifierModel]:
    """One one-vs-rest head per debt type.

    For type X the positives are exactly the X-labeled records; every other
    record (other types and NON_SATD alike) is a negative.
    """
    config = config or ClassifierConfig()
    present = {label for _, label in records}
    for td_type in TD_TYPES:
        if td_type not in present:
            raise ValueError(f"missing type {td_type.value}")
    texts = [t for t, _ in records]
    dataset_hash = sha256_of([[t, l.value] for t, l in records])
    models: dict[TDLabel, ClassifierModel] = {}
    for td_type in TD_TYPES:
        targets = [label == td_type for _, label in records]
        models[td_type] = fit_logistic(texts, targets, td_type.value, config, dataset_hash)
    return models
