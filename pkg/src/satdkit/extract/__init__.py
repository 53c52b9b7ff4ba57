from satdkit.extract.corpus import ScanResult, SourceFile, scan_corpus
from satdkit.extract.functions import (
    CommentUnit,
    FunctionUnit,
    attach_and_group_comments,
    extract_file,
    extract_functions,
)
from satdkit.extract.lexer import LexToken, TokenKind, lex_java

__all__ = [
    "SourceFile",
    "ScanResult",
    "scan_corpus",
    "LexToken",
    "TokenKind",
    "lex_java",
    "FunctionUnit",
    "CommentUnit",
    "extract_functions",
    "attach_and_group_comments",
    "extract_file",
]
