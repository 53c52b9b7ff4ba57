"""Label space for technical-debt annotation.

Six labels total: five debt types plus NON_SATD. The four "code debt" types
(everything except DOCUMENTATION) are the label space of the function-level
multi-label dataset.
"""

from __future__ import annotations

from enum import Enum


class TDLabel(str, Enum):
    DESIGN = "DESIGN"
    IMPLEMENTATION = "IMPLEMENTATION"
    DEFECT = "DEFECT"
    TEST = "TEST"
    DOCUMENTATION = "DOCUMENTATION"
    NON_SATD = "NON_SATD"

    def __str__(self) -> str:  # json-friendly
        return self.value


# Canonical order of the five debt types (used for deterministic iteration
# and for picking the first element of a predicted label list).
TD_TYPES: tuple[TDLabel, ...] = (
    TDLabel.DESIGN,
    TDLabel.IMPLEMENTATION,
    TDLabel.DEFECT,
    TDLabel.TEST,
    TDLabel.DOCUMENTATION,
)

# Debt types considered intrinsic to the code itself; DOCUMENTATION and
# NON_SATD drop out of the function-level dataset.
CODE_TD_LABELS: frozenset[TDLabel] = frozenset(
    {TDLabel.DESIGN, TDLabel.IMPLEMENTATION, TDLabel.DEFECT, TDLabel.TEST}
)

ALL_LABELS: tuple[TDLabel, ...] = TD_TYPES + (TDLabel.NON_SATD,)


def parse_label(text: str) -> TDLabel:
    """Parse a label name, tolerating case and the REQUIREMENT alias."""
    norm = text.strip().upper().replace("-", "_").replace(" ", "_")
    if norm in ("REQUIREMENT", "REQUIREMENT_DEBT"):
        norm = "IMPLEMENTATION"
    if norm in ("WITHOUT_CLASSIFICATION", "NONSATD", "NON_TD", "NONTD"):
        norm = "NON_SATD"
    try:
        return TDLabel[norm]
    except KeyError:
        raise ValueError(f"unknown TD label: {text!r}") from None
