"""Comment text normalization and the MAT keyword baseline."""

from __future__ import annotations

import re

_GUTTER_RE = re.compile(r"^[\s*]+|[\s*]+$")
_WS_RE = re.compile(r"\s+")
_MAT_RE = re.compile(r"\b(?:todo|fixme|hack|xxx)\b")


def clean_comment(raw: str) -> str:
    """Normalize a raw comment: lowercase, drop delimiters and the per-line
    ``*`` gutter of block comments, collapse whitespace.

    Idempotent; an empty result is valid.
    """
    text = raw.lower()
    for delim in ("/*", "*/", "//"):
        text = text.replace(delim, " ")
    lines = [_GUTTER_RE.sub("", line) for line in text.split("\n")]
    return _WS_RE.sub(" ", " ".join(lines)).strip()


def mat_baseline(clean_text: str) -> bool:
    """Task-annotation-tag baseline: whole-token match of todo/fixme/hack/xxx."""
    return _MAT_RE.search(clean_text) is not None


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens for feature extraction."""
    return re.findall(r"[a-z0-9_$]+", text.lower())
