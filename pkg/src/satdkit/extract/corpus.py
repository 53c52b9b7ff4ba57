"""Corpus scanning: walk a directory tree and load source files.

A file's repo id is the first path component below the scan root; files that
sit directly in the root get an empty repo id. Results are ordered
lexicographically by (repo_id, path) so repeated scans are reproducible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path, PurePosixPath


@dataclass
class SourceFile:
    repo_id: str
    path: str  # posix-style path relative to the scan root
    content: str
    line_index: list[int] = field(default_factory=list, repr=False)

    def __post_init__(self) -> None:
        if not self.line_index:
            self.line_index = byte_line_index(self.content)

    @property
    def n_lines(self) -> int:
        return len(self.line_index)


def byte_line_index(content: str) -> list[int]:
    """Byte offsets (UTF-8) of each line start; content round-trips exactly."""
    data = content.encode("utf-8")
    index = [0]
    for i, b in enumerate(data):
        if b == 0x0A and i + 1 < len(data):
            index.append(i + 1)
    if not data:
        return []
    return index


def char_line_starts(content: str) -> list[int]:
    """Character offsets of line starts (internal lexing aid)."""
    starts = [0]
    for i, ch in enumerate(content):
        if ch == "\n" and i + 1 < len(content):
            starts.append(i + 1)
    if not content:
        return []
    return starts


@dataclass
class SkipRecord:
    path: str
    reason: str


@dataclass
class ScanResult:
    files: list[SourceFile]
    skipped: list[SkipRecord] = field(default_factory=list)

    def __iter__(self):
        return iter(self.files)

    def __len__(self) -> int:
        return len(self.files)


def scan_corpus(root: str | Path, extensions: set[str] | None = None) -> ScanResult:
    """Load all matching files under root.

    extensions are compared without the leading dot ("java" by default).
    Files that fail UTF-8 decoding or raise IO errors are recorded in the
    skip report instead of aborting the scan.
    """
    root = Path(root)
    if not root.is_dir():
        raise FileNotFoundError(f"corpus root does not exist or is not a directory: {root}")
    exts = {e.lstrip(".").lower() for e in (extensions or {"java"})}

    entries: list[tuple[str, str, Path]] = []
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames.sort()
        for name in sorted(filenames):
            suffix = Path(name).suffix.lstrip(".").lower()
            if suffix not in exts:
                continue
            full = Path(dirpath) / name
            rel = PurePosixPath(full.relative_to(root).as_posix())
            repo_id = rel.parts[0] if len(rel.parts) > 1 else ""
            entries.append((repo_id, str(rel), full))

    entries.sort(key=lambda e: (e[0], e[1]))
    files: list[SourceFile] = []
    skipped: list[SkipRecord] = []
    for repo_id, rel, full in entries:
        try:
            content = full.read_text(encoding="utf-8")
        except UnicodeDecodeError:
            skipped.append(SkipRecord(path=rel, reason="invalid-utf8"))
            continue
        except OSError as exc:
            skipped.append(SkipRecord(path=rel, reason=f"io-error: {exc.strerror}"))
            continue
        files.append(SourceFile(repo_id=repo_id, path=rel, content=content))
    return ScanResult(files=files, skipped=skipped)
