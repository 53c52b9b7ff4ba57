"""Comment-aware lexer for Java source.

Classifies every character of a file into code, line-comment, block-comment,
string-literal, char-literal or text-block spans. The token spans tile the
file: concatenating token texts reproduces the input exactly. This is all the
structure the rest of the pipeline needs; no full grammar is built.

Recovery rules: an unterminated block comment or text block runs to end of
file; an unterminated string or char literal is closed at the end of its line
(Java literals are single-line, so swallowing the rest of the file would turn
one stray quote into a whole-file comment desert). Both cases are flagged in
the diagnostics list.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from enum import Enum

from satdkit.extract.corpus import SourceFile, char_line_starts


class TokenKind(str, Enum):
    CODE = "code"
    LINE_COMMENT = "line-comment"
    BLOCK_COMMENT = "block-comment"
    STRING = "string-literal"
    CHAR = "char-literal"
    TEXT_BLOCK = "text-block"


COMMENT_KINDS = (TokenKind.LINE_COMMENT, TokenKind.BLOCK_COMMENT)


@dataclass
class LexToken:
    kind: TokenKind
    start: int  # char offset, inclusive
    end: int  # char offset, exclusive
    start_line: int  # 1-based
    end_line: int

    def text(self, content: str) -> str:
        return content[self.start : self.end]


@dataclass
class LexResult:
    tokens: list[LexToken]
    diagnostics: list[str] = field(default_factory=list)

    def comments(self) -> list[LexToken]:
        return [t for t in self.tokens if t.kind in COMMENT_KINDS]


def lex_java(file: SourceFile) -> LexResult:
    content = file.content
    n = len(content)
    starts = char_line_starts(content)

    def line_of(offset: int) -> int:
        if not starts:
            return 1
        return bisect_right(starts, offset)

    tokens: list[LexToken] = []
    diagnostics: list[str] = []

    def emit(kind: TokenKind, a: int, b: int) -> None:
        if b <= a:
            return
        tokens.append(
            LexToken(kind=kind, start=a, end=b, start_line=line_of(a), end_line=line_of(b - 1))
        )

    i = 0
    code_start = 0
    while i < n:
        two = content[i : i + 2]
        if two == "//":
            emit(TokenKind.CODE, code_start, i)
            end = content.find("\n", i)
            end = n if end == -1 else end
            emit(TokenKind.LINE_COMMENT, i, end)
            i = code_start = end
        elif two == "/*":
            emit(TokenKind.CODE, code_start, i)
            close = content.find("*/", i + 2)
            if close == -1:
                diagnostics.append(f"unterminated block comment at line {line_of(i)}")
                end = n
            else:
                end = close + 2
            emit(TokenKind.BLOCK_COMMENT, i, end)
            i = code_start = end
        elif content[i : i + 3] == '"""':
            emit(TokenKind.CODE, code_start, i)
            end = _scan_text_block(content, i, diagnostics, line_of)
            emit(TokenKind.TEXT_BLOCK, i, end)
            i = code_start = end
        elif content[i] == '"':
            emit(TokenKind.CODE, code_start, i)
            end = _scan_quoted(content, i, '"', diagnostics, line_of, "string")
            emit(TokenKind.STRING, i, end)
            i = code_start = end
        elif content[i] == "'":
            emit(TokenKind.CODE, code_start, i)
            end = _scan_quoted(content, i, "'", diagnostics, line_of, "char literal")
            emit(TokenKind.CHAR, i, end)
            i = code_start = end
        else:
            i += 1
    emit(TokenKind.CODE, code_start, n)
    return LexResult(tokens=tokens, diagnostics=diagnostics)


def _scan_quoted(content, start, quote, diagnostics, line_of, what) -> int:
    n = len(content)
    j = start + 1
    while j < n:
        c = content[j]
        if c == "\\":
            j += 2
            continue
        if c == quote:
            return j + 1
        if c == "\n":
            diagnostics.append(f"unterminated {what} at line {line_of(start)}")
            return j  # newline stays outside the literal
        j += 1
    diagnostics.append(f"unterminated {what} at line {line_of(start)}")
    return n


def _scan_text_block(content, start, diagnostics, line_of) -> int:
    n = len(content)
    j = start + 3
    while j < n:
        if content[j] == "\\":
            j += 2
            continue
        if content[j : j + 3] == '"""':
            return j + 3
        j += 1
    diagnostics.append(f"unterminated text block at line {line_of(start)}")
    return n


def masked_code(content: str, tokens: list[LexToken]) -> str:
    """Same-length view of content where everything but code is blanked.

    Newlines survive so line arithmetic keeps working; every other character
    of comment/string/char/text-block tokens becomes a space. Brace counting
    and header matching run on this view.
    """
    out = list(content)
    for tok in tokens:
        if tok.kind is TokenKind.CODE:
            continue
        for k in range(tok.start, tok.end):
            if out[k] != "\n":
                out[k] = " "
    return "".join(out)
