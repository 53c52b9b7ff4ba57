"""Comment removal from extracted function text.

Code characters and string literals are preserved byte for byte; only
comment spans are deleted. A line that held nothing but comment text (or
becomes blank once its comment is gone) is dropped entirely; untouched lines
pass through unchanged, so a comment-free function survives stripping
exactly.
"""

from __future__ import annotations

from satdkit.extract.corpus import SourceFile
from satdkit.extract.functions import FunctionUnit
from satdkit.extract.lexer import COMMENT_KINDS, lex_java


def stripped_lines(fn: FunctionUnit) -> list[tuple[int, str]]:
    """(file_line_number, text) pairs of the comment-stripped function."""
    virtual = SourceFile(repo_id=fn.repo_id, path=f"{fn.path}#{fn.name}", content=fn.body_text)
    lexed = lex_java(virtual)
    keep = [True] * len(fn.body_text)
    touched_lines: set[int] = set()
    for tok in lexed.tokens:
        if tok.kind in COMMENT_KINDS:
            for k in range(tok.start, tok.end):
                keep[k] = False
            touched_lines.update(range(tok.start_line, tok.end_line + 1))

    out: list[tuple[int, str]] = []
    offset = 0
    for local_line, line in enumerate(fn.body_text.split("\n"), start=1):
        kept = "".join(ch for i, ch in enumerate(line) if keep[offset + i])
        offset += len(line) + 1
        file_line = fn.start_line + local_line - 1
        if local_line in touched_lines:
            kept = kept.rstrip()
            if kept.strip() == "":
                continue
        out.append((file_line, kept))
    return out


def strip_comments(fn: FunctionUnit) -> str:
    """The function text with every comment removed."""
    return "\n".join(text for _, text in stripped_lines(fn))
