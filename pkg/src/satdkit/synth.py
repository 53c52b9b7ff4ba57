"""Seeded synthetic comment corpus for training dry-runs and fixtures.

Each debt type owns a small set of cue tokens; generated comments mix cue
tokens with neutral filler so the corpus is keyword-separable. The same cue
table doubles as a rule-based labeler for fixture annotation runs.
"""

from __future__ import annotations

import random

from satdkit.labels import TD_TYPES, TDLabel

CUE_TOKENS: dict[TDLabel, tuple[str, ...]] = {
    TDLabel.DESIGN: ("workaround", "refactor", "hack", "ugly", "rewrite"),
    TDLabel.IMPLEMENTATION: ("todo", "implement", "unfinished", "stub", "incomplete"),
    TDLabel.DEFECT: ("bug", "fixme", "broken", "crash", "incorrect"),
    TDLabel.TEST: ("test", "tests", "untested", "coverage", "flaky"),
    TDLabel.DOCUMENTATION: ("document", "documentation", "javadoc", "docs", "describe"),
}

FILLER = (
    "the this method value result handler before after call data user list "
    "index buffer when with should could also current next close open read "
    "write parse string number cache map queue path file line block task "
    "client server request response field object state update remove insert"
).split()


def make_comment(labels: list[TDLabel], rng: random.Random, n_filler: int | None = None) -> str:
    """A synthetic comment carrying cue tokens for each given debt type."""
    words = [rng.choice(FILLER) for _ in range(n_filler if n_filler is not None else rng.randint(3, 7))]
    for label in labels:
        if label is TDLabel.NON_SATD:
            continue
        # two cue occurrences keep the signal strong under tf-idf length norm
        for _ in range(2):
            words.insert(rng.randrange(len(words) + 1), rng.choice(CUE_TOKENS[label]))
    return " ".join(words)


def synth_comment_corpus(
    n: int, seed: int = 0, satd_ratio: float = 0.55
) -> list[tuple[str, TDLabel]]:
    """n (comment, label) pairs; debt types appear in rotation so every type
    is present for any reasonably sized n."""
    rng = random.Random(seed)
    records: list[tuple[str, TDLabel]] = []
    type_cycle = 0
    for i in range(n):
        if rng.random() < satd_ratio:
            label = TD_TYPES[type_cycle % len(TD_TYPES)]
            type_cycle += 1
        else:
            label = TDLabel.NON_SATD
        records.append((make_comment([label], rng), label))
    return records


def split_train_holdout(records: list, ratio: float = 0.8, seed: int = 0) -> tuple[list, list]:
    rng = random.Random(seed)
    shuffled = list(records)
    rng.shuffle(shuffled)
    cut = int(len(shuffled) * ratio)
    return shuffled[:cut], shuffled[cut:]


def keyword_rule_label(clean_text: str) -> TDLabel:
    """First debt type (canonical order) whose cue token occurs; else NON_SATD."""
    tokens = set(clean_text.split())
    for label in TD_TYPES:
        if tokens & set(CUE_TOKENS[label]):
            return label
    return TDLabel.NON_SATD
