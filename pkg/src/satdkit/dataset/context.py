"""Code-context windows paired with a comment.

The default window is the k lines FOLLOWING the comment (the code a debt
comment talks about sits below it); a symmetric window centered on the
comment is available behind a flag for comparison. Windows clip to the
function span and are comment-stripped with the same line-dropping rule as
full stripping, so any k-line window is a contiguous slice of the stripped
full function.
"""

from __future__ import annotations

from dataclasses import dataclass

from satdkit.dataset.strip import strip_comments, stripped_lines
from satdkit.extract.functions import CommentUnit, FunctionUnit

STANDARD_LINE_SCOPES = (2, 10, 20)


@dataclass(frozen=True)
class ContextScope:
    kind: str  # "lines" | "full"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("lines", "full"):
            raise ValueError(f"unknown scope kind {self.kind!r}")
        if self.kind == "lines" and self.k <= 0:
            raise ValueError("line scope needs k > 0")

    @classmethod
    def lines(cls, k: int) -> "ContextScope":
        return cls(kind="lines", k=k)

    @classmethod
    def full(cls) -> "ContextScope":
        return cls(kind="full")

    @classmethod
    def parse(cls, text: str) -> "ContextScope":
        text = str(text).strip().lower()
        if text in ("full", "ff", "full_function"):
            return cls.full()
        return cls.lines(int(text))

    @property
    def label(self) -> str:
        return "full" if self.kind == "full" else str(self.k)

    def __str__(self) -> str:
        return self.label


def extract_context(
    comment: CommentUnit,
    fn: FunctionUnit,
    scope: ContextScope,
    window: str = "following",
) -> str:
    """The comment's code context under the given scope.

    window="following" takes the k source lines after the comment's last
    line; window="centered" splits the budget around the comment. Either way
    lines outside the function span do not exist and stripped-away comment
    lines are skipped (possibly yielding fewer than k lines, or none for a
    comment at the very end of its function).
    """
    if scope.kind == "full":
        return strip_comments(fn)
    if window == "following":
        lo, hi = comment.end_line + 1, comment.end_line + scope.k
    elif window == "centered":
        before = scope.k // 2
        lo, hi = comment.start_line - before, comment.end_line + (scope.k - before)
    else:
        raise ValueError(f"unknown window mode {window!r}")
    picked = [
        text
        for file_line, text in stripped_lines(fn)
        if lo <= file_line <= hi
    ]
    return "\n".join(picked)
