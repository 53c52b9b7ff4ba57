"""Builders for the two dataset products.

Comment-level records pair a cleaned comment with its code context and a
six-class label. Function-level records strip the comments out and carry the
union of the function's final comment labels restricted to the four code
debt types; the empty set is a valid (negative) record.
"""

from __future__ import annotations

from dataclasses import dataclass

from satdkit.dataset.context import ContextScope, extract_context
from satdkit.dataset.strip import strip_comments
from satdkit.extract.functions import CommentUnit, FunctionUnit
from satdkit.labels import CODE_TD_LABELS, TD_TYPES, TDLabel


@dataclass
class CommentSample:
    comment_id: str
    comment: str
    context: str
    scope: str
    label: TDLabel
    project: str

    def to_json(self) -> dict:
        return {
            "id": self.comment_id,
            "comment": self.comment,
            "context": self.context,
            "scope": self.scope,
            "label": self.label.value,
            "project": self.project,
        }


@dataclass
class CodeSample:
    function_id: str
    code: str
    labels: list[TDLabel]
    project: str

    def to_json(self) -> dict:
        return {
            "id": self.function_id,
            "code": self.code,
            "labels": [l.value for l in self.labels],
            "project": self.project,
        }


def _comment_index(
    functions: list[FunctionUnit],
) -> dict[str, tuple[CommentUnit, FunctionUnit]]:
    index: dict[str, tuple[CommentUnit, FunctionUnit]] = {}
    for fn in functions:
        for c in fn.comments:
            index[c.id] = (c, fn)
    return index


def _check_resolvable(finals: list[tuple[str, TDLabel]], index: dict) -> None:
    dangling = [cid for cid, _ in finals if cid not in index]
    if dangling:
        raise ValueError(f"final labels reference unknown comment ids: {sorted(dangling)}")


def build_comment_dataset(
    finals: list[tuple[str, TDLabel]] | dict[str, TDLabel],
    functions: list[FunctionUnit],
    scope: ContextScope,
    window: str = "following",
) -> list[CommentSample]:
    """One record per finally-labeled comment, six-class label space."""
    if isinstance(finals, dict):
        finals = list(finals.items())
    index = _comment_index(functions)
    _check_resolvable(finals, index)
    samples = []
    for comment_id, label in finals:
        comment, fn = index[comment_id]
        samples.append(
            CommentSample(
                comment_id=comment_id,
                comment=comment.clean_text,
                context=extract_context(comment, fn, scope, window=window),
                scope=scope.label,
                label=label,
                project=fn.repo_id,
            )
        )
    return samples


def build_code_dataset(
    finals: list[tuple[str, TDLabel]] | dict[str, TDLabel],
    functions: list[FunctionUnit],
) -> list[CodeSample]:
    """One record per function owning at least one finally-labeled comment.

    labels = union of the comment finals, intersected with the four code
    debt types; DOCUMENTATION and NON_SATD contribute nothing, so a function
    whose comments carry only those ends up with an empty label set.
    """
    if isinstance(finals, dict):
        finals = list(finals.items())
    index = _comment_index(functions)
    _check_resolvable(finals, index)
    by_function: dict[str, set[TDLabel]] = {}
    for comment_id, label in finals:
        _, fn = index[comment_id]
        by_function.setdefault(fn.id, set()).add(label)
    samples = []
    for fn in functions:
        if fn.id not in by_function:
            continue
        label_set = by_function[fn.id] & CODE_TD_LABELS
        samples.append(
            CodeSample(
                function_id=fn.id,
                code=strip_comments(fn),
                labels=[t for t in TD_TYPES if t in label_set],
                project=fn.repo_id,
            )
        )
    return samples


def _normalize_ws(text: str) -> str:
    return " ".join(text.split())


def dedup_comment_samples(samples: list[CommentSample]) -> list[CommentSample]:
    """Drop repeats by cleaned comment text, keeping first occurrences."""
    seen: set[str] = set()
    out = []
    for s in samples:
        key = _normalize_ws(s.comment)
        if key in seen:
            continue
        seen.add(key)
        out.append(s)
    return out


def dedup_code_samples(samples: list[CodeSample]) -> list[CodeSample]:
    """Drop repeats by whitespace-normalized code text."""
    seen: set[str] = set()
    out = []
    for s in samples:
        key = _normalize_ws(s.code)
        if key in seen:
            continue
        seen.add(key)
        out.append(s)
    return out


def dedup_rows(rows: list[dict], kind: str) -> list[dict]:
    """Dedup raw JSONL rows of either dataset kind (CLI path)."""
    field = {"comment": "comment", "code": "code"}[kind]
    seen: set[str] = set()
    out = []
    for row in rows:
        key = _normalize_ws(row[field])
        if key in seen:
            continue
        seen.add(key)
        out.append(row)
    return out
