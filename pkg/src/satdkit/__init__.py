"""satdkit: a corpus-to-dataset toolkit for self-admitted technical debt.

Pipeline stages: scan and lex Java sources, extract function/comment pairs,
classify comments into technical-debt types, rank them by prediction entropy,
select candidates for two-annotator labeling, and build comment-level and
function-level datasets with evaluation utilities.
"""

__version__ = "0.1.0"

from satdkit.labels import CODE_TD_LABELS, TD_TYPES, TDLabel

__all__ = ["TDLabel", "TD_TYPES", "CODE_TD_LABELS", "__version__"]
