"""Deterministic token embeddings.

A stand-in for learned encoder embeddings: every token gets a unit-norm
vector drawn from a Gaussian seeded by hashing (seed, token), i.e. a signed
random projection of the token's hash. The same token always maps to the
same vector, across runs and machines.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field

import numpy as np

_TOKEN_RE = re.compile(r"[A-Za-z0-9_$]+")


def fusion_tokens(text: str) -> list[str]:
    """Whitespace/punctuation tokenization used on both comments and code."""
    return [t.lower() for t in _TOKEN_RE.findall(text)]


@dataclass
class EmbeddingMatrix:
    tokens: list[str]
    values: np.ndarray  # rows x dim
    provenance: dict = field(default_factory=dict)

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def dim(self) -> int:
        return self.values.shape[1]


def _token_vector(token: str, dim: int, seed: int) -> np.ndarray:
    digest = hashlib.sha256(f"{seed}\x1f{token}".encode("utf-8")).digest()
    rng = np.random.default_rng(int.from_bytes(digest[:8], "little"))
    v = rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def embed_tokens(text: str, dim: int = 64, seed: int = 0) -> EmbeddingMatrix:
    """Embed a text's tokens; raises on texts with no tokens."""
    tokens = fusion_tokens(text)
    if not tokens:
        raise ValueError("cannot embed empty token sequence")
    if dim < 1:
        raise ValueError("dim must be >= 1")
    cache: dict[str, np.ndarray] = {}
    rows = []
    for tok in tokens:
        if tok not in cache:
            cache[tok] = _token_vector(tok, dim, seed)
        rows.append(cache[tok])
    return EmbeddingMatrix(
        tokens=tokens,
        values=np.vstack(rows),
        provenance={"embedder": "hash-projection", "dim": dim, "seed": seed},
    )
