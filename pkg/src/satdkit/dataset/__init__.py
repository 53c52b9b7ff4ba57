from satdkit.dataset.build import (
    CodeSample,
    CommentSample,
    build_code_dataset,
    build_comment_dataset,
    dedup_code_samples,
    dedup_comment_samples,
)
from satdkit.dataset.context import ContextScope, extract_context
from satdkit.dataset.folds import FoldSplit, cross_project_folds
from satdkit.dataset.stats import stats_report
from satdkit.dataset.strip import strip_comments, stripped_lines

__all__ = [
    "strip_comments",
    "stripped_lines",
    "ContextScope",
    "extract_context",
    "CommentSample",
    "CodeSample",
    "build_comment_dataset",
    "build_code_dataset",
    "dedup_comment_samples",
    "dedup_code_samples",
    "FoldSplit",
    "cross_project_folds",
    "stats_report",
]
