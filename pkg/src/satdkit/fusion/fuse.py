"""Comment/code integration: token concatenation and attention fusion.

The attention variant computes a row-stochastic matrix from code-token
embeddings onto comment-token embeddings (softmax over the comment
positions for each code token) and mixes the comment embeddings with it, so
every fused row is a convex combination of comment rows. The published
formula's second product is written against the transposed comment matrix,
which does not conform; the only shape-consistent reading, A times the
comment matrix itself, is implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from satdkit.fusion.embed import EmbeddingMatrix

SEPARATOR = "<sep>"


def str_concat(
    comment_tokens: list[str], code_tokens: list[str], max_len: int, separator: str = SEPARATOR
) -> list[str]:
    """Comment first, separator, then code, truncating from the code tail.

    The comment is only ever cut when it alone exceeds max_len; the
    separator appears whenever there is room for it.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    out = list(comment_tokens[:max_len])
    if len(out) < max_len:
        out.append(separator)
    if len(out) < max_len:
        out.extend(code_tokens[: max_len - len(out)])
    return out


@dataclass
class FusedRepresentation:
    attention: np.ndarray  # M x N, rows sum to 1
    fused: np.ndarray  # M x D
    pooled: np.ndarray  # D


def _as_array(m) -> np.ndarray:
    if isinstance(m, EmbeddingMatrix):
        return m.values
    return np.asarray(m, dtype=np.float64)


def code_att(code_emb, comment_emb) -> FusedRepresentation:
    """Attention fusion of code rows (M x D) onto comment rows (N x D)."""
    g = _as_array(code_emb)
    h = _as_array(comment_emb)
    if g.ndim != 2 or h.ndim != 2:
        raise ValueError("embedding matrices must be 2-D")
    if g.shape[1] != h.shape[1]:
        raise ValueError(f"embedding dims differ: {g.shape[1]} vs {h.shape[1]}")
    scores = g @ h.T
    scores = scores - scores.max(axis=1, keepdims=True)  # stable softmax
    exp = np.exp(scores)
    attention = exp / exp.sum(axis=1, keepdims=True)
    fused = attention @ h
    pooled = fused.mean(axis=0)
    return FusedRepresentation(attention=attention, fused=fused, pooled=pooled)
