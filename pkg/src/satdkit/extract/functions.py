"""Method-span extraction and comment attachment.

Methods are located on the masked (comment- and literal-free) text by a
header pattern -- optional annotations/modifiers/type parameters, an optional
return type (absent for constructors), a name and a parameter list -- followed
by an opening brace. The span is closed by brace matching on the masked text,
and scanning resumes after the close, so methods of local or anonymous
classes stay inside the enclosing method's body.

Comments are grouped first (runs of line comments on consecutive lines with
no code between them become one unit), then attached: the group immediately
above the header becomes the leading comment, groups inside the braces become
inner comments, everything else is dropped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from satdkit.classify.cleaning import clean_comment
from satdkit.extract.corpus import SourceFile
from satdkit.extract.lexer import (
    COMMENT_KINDS,
    LexResult,
    LexToken,
    TokenKind,
    lex_java,
    masked_code,
)
from satdkit.util import stable_id


class ExtractionError(Exception):
    """File-level failure; the file is skipped and the reason recorded."""


@dataclass
class CommentUnit:
    id: str
    function_id: str
    raw_text: str
    clean_text: str
    start_line: int
    end_line: int
    kind: str  # "line" | "block"
    position: str  # "leading" | "inner"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "raw": self.raw_text,
            "clean": self.clean_text,
            "start_line": self.start_line,
            "end_line": self.end_line,
            "kind": self.kind,
            "position": self.position,
        }


@dataclass
class FunctionUnit:
    id: str
    repo_id: str
    path: str
    name: str
    signature: str
    start_line: int
    end_line: int
    body_text: str
    comments: list[CommentUnit] = field(default_factory=list)
    # char offsets into the owning file, kept for attachment; not serialized
    start_offset: int = 0
    brace_offset: int = 0
    end_offset: int = 0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "repo": self.repo_id,
            "path": self.path,
            "name": self.name,
            "signature": self.signature,
            "start_line": self.start_line,
            "end_line": self.end_line,
            "body": self.body_text,
            "comments": [c.to_json() for c in self.comments],
        }


def function_from_json(row: dict) -> FunctionUnit:
    fn = FunctionUnit(
        id=row["id"],
        repo_id=row.get("repo", ""),
        path=row.get("path", ""),
        name=row.get("name", ""),
        signature=row.get("signature", ""),
        start_line=row["start_line"],
        end_line=row["end_line"],
        body_text=row["body"],
    )
    for c in row.get("comments", []):
        fn.comments.append(
            CommentUnit(
                id=c["id"],
                function_id=fn.id,
                raw_text=c["raw"],
                clean_text=c["clean"],
                start_line=c["start_line"],
                end_line=c["end_line"],
                kind=c["kind"],
                position=c["position"],
            )
        )
    return fn


_MODIFIER = r"(?:public|protected|private|static|final|abstract|synchronized|native|strictfp|default)"

HEADER_RE = re.compile(
    r"(?:(?:@[\w$.]+(?:\([^()]*\))?|" + _MODIFIER + r")\s+)*"
    r"(?:<[^;{}]*?>\s*)?"
    r"(?:(?P<rtype>[\w$][\w$.]*(?:<[^;{}]*?>)?(?:\s*\[\s*\])*)\s+)?"
    r"(?P<name>[A-Za-z_$][\w$]*)\s*"
    r"\((?P<params>[^()]*(?:\([^()]*\)[^()]*)*)\)\s*"
    r"(?:throws\s+[\w$.\s,<>\[\]]+?)?\s*\{"
)

_KEYWORD_NAMES = frozenset(
    "if else while for switch catch synchronized try do return new throw "
    "finally assert case yield instanceof".split()
)
_BAD_RTYPES = frozenset("new return throw class interface enum record case else instanceof".split())
_WORDCHARS = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_$")

_GENERIC_RE = re.compile(r"<[^<>]*>")
_PARAM_PREFIX_RE = re.compile(r"^(?:(?:final|@[\w$.]+(?:\([^()]*\))?)\s+)*")
_IDENT_RE = re.compile(r"[\w$]+(?:\s*\[\s*\])*$")


def _split_top_level(params: str) -> list[str]:
    parts, depth, buf = [], 0, []
    for ch in params:
        if ch in "<([":
            depth += 1
        elif ch in ">)]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
    parts.append("".join(buf))
    return parts


def _params_look_declared(params: str) -> bool:
    """True if the parenthesized text looks like a parameter declaration list.

    Filters out things like enum constant bodies (``RED(0xff0000) {``)
    where the parens hold argument expressions, not ``type name`` pairs.
    """
    if params.strip() == "":
        return True
    for part in _split_top_level(params):
        part = _PARAM_PREFIX_RE.sub("", part.strip())
        flat = _GENERIC_RE.sub("", _GENERIC_RE.sub("", part))  # two passes for nesting
        words = flat.split()
        if len(words) < 2:
            return False
        if not _IDENT_RE.match(words[-1]):
            return False
    return True


def _valid_header(masked: str, m: re.Match) -> bool:
    name = m.group("name")
    rtype = m.group("rtype")
    if name in _KEYWORD_NAMES:
        return False
    if rtype is not None and rtype.split("<")[0] in _BAD_RTYPES:
        return False
    start = m.start()
    if start > 0 and (masked[start - 1] in _WORDCHARS or masked[start - 1] == "."):
        return False
    npos = m.start("name")
    if npos > 0 and (masked[npos - 1] in _WORDCHARS or masked[npos - 1] == "."):
        return False
    before = masked[:start].rstrip()
    if before.endswith("new") and (len(before) == 3 or before[-4] not in _WORDCHARS):
        return False
    return _params_look_declared(m.group("params"))


def _match_brace(masked: str, open_idx: int) -> int | None:
    depth = 0
    for k in range(open_idx, len(masked)):
        c = masked[k]
        if c == "{":
            depth += 1
        elif c == "}":
            depth -= 1
            if depth == 0:
                return k
    return None


def extract_functions(file: SourceFile, lexed: LexResult | None = None) -> list[FunctionUnit]:
    """One FunctionUnit per method/constructor declaration with a body.

    Raises ExtractionError when braces do not balance after masking; the
    caller records the diagnostic and skips the file.
    """
    lexed = lexed or lex_java(file)
    masked = masked_code(file.content, lexed.tokens)
    if masked.count("{") != masked.count("}"):
        raise ExtractionError(
            f"{file.path}: unbalanced braces after masking "
            f"({masked.count('{')} open / {masked.count('}')} close)"
        )

    from satdkit.extract.corpus import char_line_starts
    from bisect import bisect_right

    starts = char_line_starts(file.content)

    def line_of(offset: int) -> int:
        return bisect_right(starts, offset) if starts else 1

    units: list[FunctionUnit] = []
    pos = 0
    while True:
        m = HEADER_RE.search(masked, pos)
        if m is None:
            break
        if not _valid_header(masked, m):
            pos = m.start("name") + 1
            continue
        brace = m.end() - 1
        close = _match_brace(masked, brace)
        if close is None:
            raise ExtractionError(f"{file.path}: unmatched brace at line {line_of(brace)}")
        signature = " ".join(masked[m.start() : brace].split())
        start_line = line_of(m.start())
        unit = FunctionUnit(
            id=stable_id(file.repo_id, file.path, start_line, signature),
            repo_id=file.repo_id,
            path=file.path,
            name=m.group("name"),
            signature=signature,
            start_line=start_line,
            end_line=line_of(close),
            body_text=file.content[m.start() : close + 1],
            start_offset=m.start(),
            brace_offset=brace,
            end_offset=close,
        )
        units.append(unit)
        pos = close + 1
    return units


@dataclass
class _CommentGroup:
    kind: str
    start: int
    end: int
    start_line: int
    end_line: int
    raw_text: str


def group_comments(file: SourceFile, lexed: LexResult) -> list[_CommentGroup]:
    """Merge runs of line comments on consecutive lines into single groups."""
    groups: list[_CommentGroup] = []
    for tok in lexed.tokens:
        if tok.kind not in COMMENT_KINDS:
            continue
        raw = tok.text(file.content)
        kind = "line" if tok.kind is TokenKind.LINE_COMMENT else "block"
        if (
            groups
            and kind == "line"
            and groups[-1].kind == "line"
            and tok.start_line == groups[-1].end_line + 1
            and file.content[groups[-1].end : tok.start].strip() == ""
        ):
            last = groups[-1]
            last.raw_text += "\n" + raw
            last.end = tok.end
            last.end_line = tok.end_line
        else:
            groups.append(
                _CommentGroup(
                    kind=kind,
                    start=tok.start,
                    end=tok.end,
                    start_line=tok.start_line,
                    end_line=tok.end_line,
                    raw_text=raw,
                )
            )
    return groups


_GAP_RE = re.compile(r"(?:\s|@[\w$.]+(?:\([^()]*\))?)*$")


def attach_and_group_comments(
    fn: FunctionUnit, file: SourceFile, lexed: LexResult, groups: list[_CommentGroup] | None = None
) -> FunctionUnit:
    """Attach the leading comment group and all inner groups to fn."""
    if groups is None:
        groups = group_comments(file, lexed)
    masked = masked_code(file.content, lexed.tokens)

    attached: list[tuple[_CommentGroup, str]] = []
    leading_candidate: _CommentGroup | None = None
    for g in groups:
        if g.end <= fn.start_offset:
            if leading_candidate is None or g.end > leading_candidate.end:
                leading_candidate = g
        elif fn.brace_offset < g.start and g.end <= fn.end_offset:
            attached.append((g, "inner"))
    if leading_candidate is not None and leading_candidate.end_line < fn.start_line:
        gap = masked[leading_candidate.end : fn.start_offset]
        if _GAP_RE.fullmatch(gap):
            attached.append((leading_candidate, "leading"))

    attached.sort(key=lambda pair: pair[0].start_line)
    fn.comments = [
        CommentUnit(
            id=stable_id(fn.id, g.start_line, g.end_line),
            function_id=fn.id,
            raw_text=g.raw_text,
            clean_text=clean_comment(g.raw_text),
            start_line=g.start_line,
            end_line=g.end_line,
            kind=g.kind,
            position=position,
        )
        for g, position in attached
    ]
    return fn


@dataclass
class FileExtraction:
    functions: list[FunctionUnit]
    diagnostics: list[str]
    skipped: bool = False


def extract_file(file: SourceFile) -> FileExtraction:
    """Lex, extract and attach in one step; never raises on bad input."""
    lexed = lex_java(file)
    try:
        units = extract_functions(file, lexed)
    except ExtractionError as exc:
        return FileExtraction(functions=[], diagnostics=[str(exc)], skipped=True)
    groups = group_comments(file, lexed)
    for fn in units:
        attach_and_group_comments(fn, file, lexed, groups)
    return FileExtraction(functions=units, diagnostics=list(lexed.diagnostics))
