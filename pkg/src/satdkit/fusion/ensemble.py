"""Majority vote over per-scope predictions."""

from __future__ import annotations

from collections import Counter

from satdkit.labels import ALL_LABELS, TDLabel

FULL_KEYS = ("full", "ff", "full_function")


def _is_full(key) -> bool:
    label = getattr(key, "label", None)
    text = label if label is not None else str(key)
    return text.lower() in FULL_KEYS


def majority_vote(
    votes: dict,
    probabilities: dict | None = None,
) -> TDLabel:
    """Plurality label over the voters (keyed by context scope).

    Ties break on the highest class probability summed across voters when
    probabilities are given ({scope: {label: p}}); otherwise the
    full-function voter's label wins, falling back to canonical label order.
    """
    if not votes:
        raise ValueError("majority_vote needs at least one voter")
    counts = Counter(votes.values())
    top = max(counts.values())
    tied = [l for l in counts if counts[l] == top]
    if len(tied) == 1:
        return tied[0]

    order = {l: i for i, l in enumerate(ALL_LABELS)}
    if probabilities:
        def summed(label: TDLabel) -> float:
            total = 0.0
            for scope in votes:
                total += float(probabilities.get(scope, {}).get(label, 0.0))
            return total

        tied.sort(key=lambda l: (-summed(l), order[l]))
        return tied[0]

    for scope, label in votes.items():
        if _is_full(scope) and label in tied:
            return label
    tied.sort(key=lambda l: order[l])
    return tied[0]
