"""Shared helpers: stable ids, JSONL I/O with provenance headers."""

from __future__ import annotations

import hashlib
import json
import os
import time
from pathlib import Path
from typing import Any, Iterable, Iterator


def stable_id(*parts: object) -> str:
    """Stable 16-hex-digit id from the given parts (order matters)."""
    h = hashlib.sha1("\x1f".join(str(p) for p in parts).encode("utf-8"))
    return h.hexdigest()[:16]


def sha256_of(obj: Any) -> str:
    """sha256 of a canonical JSON encoding of obj."""
    blob = json.dumps(obj, sort_keys=True, ensure_ascii=False, default=str)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _timestamp() -> str:
    # SOURCE_DATE_EPOCH makes artifact headers reproducible (byte-identical
    # reruns for golden tests); otherwise wall-clock UTC.
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    t = int(epoch) if epoch else time.time()
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime(t))


def artifact_header(config_hash: str = "", seed: int | None = None, **extra: Any) -> dict:
    from satdkit import __version__

    header: dict[str, Any] = {
        "tool_version": __version__,
        "config_hash": config_hash,
        "seed": seed,
        "created_at": _timestamp(),
    }
    header.update(extra)
    return {"_header": header}


def write_jsonl(path: str | Path, rows: Iterable[dict], header: dict | None = None) -> int:
    """Write rows as JSONL; optional provenance header as the first line.

    Returns the number of data rows written.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        if header is not None:
            fh.write(json.dumps(header, ensure_ascii=False, sort_keys=True) + "\n")
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False, sort_keys=True) + "\n")
            n += 1
    return n


def read_jsonl(path: str | Path) -> Iterator[dict]:
    """Yield data rows from a JSONL file, skipping a provenance header line."""
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: invalid JSON: {exc}") from None
            if isinstance(row, dict) and "_header" in row:
                continue
            yield row


def read_jsonl_header(path: str | Path) -> dict | None:
    with open(path, "r", encoding="utf-8") as fh:
        first = fh.readline().strip()
    if not first:
        return None
    row = json.loads(first)
    if isinstance(row, dict) and "_header" in row:
        return row["_header"]
    return None
