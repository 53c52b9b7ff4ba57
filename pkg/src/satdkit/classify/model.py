"""Linear comment classifier: unigram+bigram TF-IDF into logistic regression.

The model is a plain parameter container -- vocabulary, idf vector, weight
vector, bias -- so prediction is a pure function of (model, text) and the
JSON serialization round-trips bit-exactly (Python floats survive the
repr/parse cycle unchanged). Training uses scikit-learn's lbfgs solver,
which is deterministic for a fixed input, so two runs with the same seed and
data produce identical model files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.sparse import csr_matrix

from satdkit.classify.cleaning import tokenize

FORMAT_VERSION = 1


@dataclass
class ClassifierConfig:
    seed: int = 0
    c: float = 16.0  # inverse L2 strength
    max_iter: int = 500
    ngram_max: int = 2
    min_df: int = 1


def _ngrams(text: str, ngram_max: int) -> list[str]:
    toks = tokenize(text)
    grams = list(toks)
    for n in range(2, ngram_max + 1):
        grams.extend(" ".join(toks[i : i + n]) for i in range(len(toks) - n + 1))
    return grams


@dataclass
class ClassifierModel:
    positive_class: str
    vocabulary: dict[str, int]
    idf: np.ndarray
    weights: np.ndarray
    bias: float
    seed: int
    dataset_hash: str
    ngram_max: int = 2
    format_version: int = field(default=FORMAT_VERSION)

    def features(self, texts: list[str]) -> csr_matrix:
        """L2-normalized TF-IDF rows over the fitted vocabulary."""
        indptr = [0]
        indices: list[int] = []
        data: list[float] = []
        for text in texts:
            counts: dict[int, float] = {}
            for gram in _ngrams(text, self.ngram_max):
                idx = self.vocabulary.get(gram)
                if idx is not None:
                    counts[idx] = counts.get(idx, 0.0) + 1.0
            items = sorted(counts.items())
            row = np.array([tf * self.idf[i] for i, tf in items])
            norm = math.sqrt(float(np.dot(row, row)))
            if norm > 0:
                row = row / norm
            indices.extend(i for i, _ in items)
            data.extend(row.tolist())
            indptr.append(len(indices))
        return csr_matrix(
            (np.array(data), np.array(indices, dtype=np.int64), np.array(indptr, dtype=np.int64)),
            shape=(len(texts), len(self.vocabulary)),
        )

    def predict_proba(self, text: str) -> float:
        """Probability that text belongs to the positive class."""
        x = self.features([text])
        z = float(x.dot(self.weights)[0]) + self.bias
        return 1.0 / (1.0 + math.exp(-z))

    def predict_proba_many(self, texts: list[str]) -> np.ndarray:
        x = self.features(texts)
        z = np.asarray(x.dot(self.weights)).ravel() + self.bias
        return 1.0 / (1.0 + np.exp(-z))

    def to_json(self) -> dict:
        vocab_items = sorted(self.vocabulary.items(), key=lambda kv: kv[1])
        return {
            "format_version": self.format_version,
            "seed": self.seed,
            "dataset_hash": self.dataset_hash,
            "positive_class": self.positive_class,
            "ngram_max": self.ngram_max,
            "vocabulary": [k for k, _ in vocab_items],
            "idf": self.idf.tolist(),
            "weights": self.weights.tolist(),
            "bias": self.bias,
        }

    @classmethod
    def from_json(cls, blob: dict) -> "ClassifierModel":
        vocab = {gram: i for i, gram in enumerate(blob["vocabulary"])}
        return cls(
            positive_class=blob["positive_class"],
            vocabulary=vocab,
            idf=np.array(blob["idf"], dtype=np.float64),
            weights=np.array(blob["weights"], dtype=np.float64),
            bias=float(blob["bias"]),
            seed=int(blob["seed"]),
            dataset_hash=blob["dataset_hash"],
            ngram_max=int(blob.get("ngram_max", 2)),
            format_version=int(blob.get("format_version", FORMAT_VERSION)),
        )

    def save(self, path: str | Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_json(), sort_keys=True), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "ClassifierModel":
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def build_vocabulary(texts: list[str], ngram_max: int, min_df: int) -> tuple[dict[str, int], np.ndarray]:
    """Document-frequency vocabulary with smooth idf, in sorted-gram order."""
    df: dict[str, int] = {}
    for text in texts:
        for gram in set(_ngrams(text, ngram_max)):
            df[gram] = df.get(gram, 0) + 1
    kept = sorted(g for g, d in df.items() if d >= min_df)
    vocab = {g: i for i, g in enumerate(kept)}
    n = len(texts)
    idf = np.array([math.log((1 + n) / (1 + df[g])) + 1.0 for g in kept], dtype=np.float64)
    return vocab, idf


def fit_logistic(
    texts: list[str], targets: list[bool], positive_class: str, config: ClassifierConfig, dataset_hash: str
) -> ClassifierModel:
    """Fit one binary head. Requires both classes present."""
    from sklearn.linear_model import LogisticRegression

    y = np.array([1 if t else 0 for t in targets], dtype=np.int64)
    if y.min() == y.max():
        raise ValueError(
            f"degenerate training set for {positive_class}: only one class present"
        )
    vocab, idf = build_vocabulary(texts, config.ngram_max, config.min_df)
    model = ClassifierModel(
        positive_class=positive_class,
        vocabulary=vocab,
        idf=idf,
        weights=np.zeros(len(vocab)),
        bias=0.0,
        seed=config.seed,
        dataset_hash=dataset_hash,
        ngram_max=config.ngram_max,
    )
    x = model.features(texts)
    # balanced weights keep the 0.5 threshold sane for rare positive classes
    clf = LogisticRegression(
        C=config.c, max_iter=config.max_iter, class_weight="balanced", random_state=config.seed
    )
    clf.fit(x, y)
    model.weights = clf.coef_[0].astype(np.float64)
    model.bias = float(clf.intercept_[0])
    return model
