"""Reader for the classic comment-classification CSV record shape
(project, comment text, classification), tolerant of the common column-name
variants, for merging external corpora into the comment dataset."""

from __future__ import annotations

import csv
from pathlib import Path

from satdkit.labels import TDLabel, parse_label

_PROJECT_COLS = ("projectname", "project", "project_name", "repo")
_COMMENT_COLS = ("commenttext", "comment", "text", "comment_text")
_LABEL_COLS = ("classification", "label", "category", "tdtype")


def _pick(fieldnames: list[str], candidates: tuple[str, ...], what: str) -> str:
    lowered = {f.lower().strip(): f for f in fieldnames}
    for c in candidates:
        if c in lowered:
            return lowered[c]
    raise ValueError(f"no {what} column found; expected one of {candidates}")


def read_maldonado(path: str | Path) -> list[dict]:
    """Rows of {project, comment, label: TDLabel} from a classification CSV."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if not reader.fieldnames:
            raise ValueError(f"{path}: empty CSV")
        project_col = _pick(reader.fieldnames, _PROJECT_COLS, "project")
        comment_col = _pick(reader.fieldnames, _COMMENT_COLS, "comment")
        label_col = _pick(reader.fieldnames, _LABEL_COLS, "classification")
        rows = []
        for rec in reader:
            rows.append(
                {
                    "project": rec[project_col].strip(),
                    "comment": rec[comment_col],
                    "label": parse_label(rec[label_col]),
                }
            )
    return rows
