"""Agreement metrics over completed annotation tasks.

Both metrics use the ORIGINAL label pair, never the audited consensus:
disagreement that was later talked out still counts as disagreement, which is
what makes the reported numbers meaningful quality signals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from satdkit.annotation.tasks import AnnotationTask
from satdkit.labels import ALL_LABELS


def raw_agreement(tasks: list[AnnotationTask]) -> float:
    """Percentage of tasks where both annotators chose the same label."""
    pairs = [(t.label_a, t.label_b) for t in tasks]
    if not pairs:
        raise ValueError("raw agreement is undefined on an empty task set")
    for t in tasks:
        if not t.both_labeled():
            raise ValueError(f"task {t.task_id} is missing a label")
    agree = sum(1 for a, b in pairs if a == b)
    return 100.0 * agree / len(pairs)


def landis_koch_band(kappa: float) -> str:
    if kappa <= 0:
        return "Poor"
    if kappa <= 0.20:
        return "Slight"
    if kappa <= 0.40:
        return "Fair"
    if kappa <= 0.60:
        return "Moderate"
    if kappa <= 0.80:
        return "Substantial"
    return "Almost Perfect"


class KappaResult(NamedTuple):
    kappa: float
    band: str
    degenerate: bool = False


def kappa_from_table(table) -> KappaResult:
    """Cohen's kappa from a square confusion table (rows: annotator A)."""
    t = np.asarray(table, dtype=np.float64)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ValueError("confusion table must be square")
    n = t.sum()
    if n < 2:
        raise ValueError("need at least two items for kappa")
    p_o = float(np.trace(t) / n)
    row = t.sum(axis=1) / n
    col = t.sum(axis=0) / n
    p_e = float(np.dot(row, col))
    if abs(1.0 - p_e) < 1e-12:
        # both annotators constant and equal: perfect but uninformative
        return KappaResult(kappa=1.0, band=landis_koch_band(1.0), degenerate=True)
    kappa = (p_o - p_e) / (1.0 - p_e)
    return KappaResult(kappa=kappa, band=landis_koch_band(kappa))


def confusion_table(tasks: list[AnnotationTask]) -> np.ndarray:
    index = {label: i for i, label in enumerate(ALL_LABELS)}
    t = np.zeros((len(ALL_LABELS), len(ALL_LABELS)), dtype=np.float64)
    for task in tasks:
        if not task.both_labeled():
            raise ValueError(f"task {task.task_id} is missing a label")
        t[index[task.label_a], index[task.label_b]] += 1
    return t


def cohen_kappa(tasks: list[AnnotationTask]) -> KappaResult:
    if len(tasks) < 2:
        raise ValueError("need at least two completed tasks for kappa")
    return kappa_from_table(confusion_table(tasks))


@dataclass
class AgreementReport:
    n_items: int
    raw_agreement: float  # percentage
    kappa: float | None  # None when fewer than two items
    band: str | None
    degenerate: bool = False
    per_phase: dict[int, dict] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n_items": self.n_items,
            "raw_agreement": self.raw_agreement,
            "kappa": self.kappa,
            "band": self.band,
            "degenerate": self.degenerate,
            "per_phase": {str(k): v for k, v in self.per_phase.items()},
        }


def agreement_report(tasks: list[AnnotationTask]) -> AgreementReport:
    """Raw agreement + kappa overall and per phase, on pre-audit labels."""
    done = [t for t in tasks if t.both_labeled()]
    if not done:
        raise ValueError("no completed tasks to report on")
    raw = raw_agreement(done)
    # kappa is undefined below two items; report null rather than a made-up value
    result = cohen_kappa(done) if len(done) >= 2 else KappaResult(None, None, True)
    per_phase: dict[int, dict] = {}
    for phase in sorted({t.phase for t in done}):
        sub = [t for t in done if t.phase == phase]
        sub_raw = raw_agreement(sub)
        sub_k = cohen_kappa(sub) if len(sub) >= 2 else KappaResult(None, None, True)
        per_phase[phase] = {
            "n_items": len(sub),
            "raw_agreement": sub_raw,
            "kappa": sub_k.kappa,
            "band": sub_k.band,
        }
    return AgreementReport(
        n_items=len(done),
        raw_agreement=raw,
        kappa=result.kappa,
        band=result.band,
        degenerate=result.degenerate,
        per_phase=per_phase,
    )
