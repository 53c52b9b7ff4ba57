"""Evaluation for the comment tasks and the function-level multi-label task.

Three single-label tasks: identification (debt vs not), classification
(five debt types), detection (six classes). The function-level task is
multi-label over the four code debt types, scored with Exact Match and the
example-based F1 2|P&G|/(|P|+|G|), where two empty sets count as a perfect
match. Macro and micro averages are reported side by side since averaging
conventions differ across the literature.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from satdkit.labels import ALL_LABELS, TD_TYPES, TDLabel

TASKS = ("identification", "classification", "detection", "code_multilabel")

_POSITIVE = "TD"
_NEGATIVE = "NON_TD"


@dataclass
class ClassScores:
    precision: float
    recall: float
    f1: float
    support: int

    def to_json(self) -> dict:
        return {
            "precision": 100.0 * self.precision,
            "recall": 100.0 * self.recall,
            "f1": 100.0 * self.f1,
            "support": self.support,
        }


@dataclass
class EvalReport:
    task: str
    n_examples: int
    per_class: dict[str, ClassScores]
    macro_f1: float
    micro_f1: float
    exact_match: float | None = None
    example_f1: float | None = None

    def to_json(self) -> dict:
        out = {
            "task": self.task,
            "n_examples": self.n_examples,
            "per_class": {k: v.to_json() for k, v in self.per_class.items()},
            "macro_f1": 100.0 * self.macro_f1,
            "micro_f1": 100.0 * self.micro_f1,
        }
        if self.exact_match is not None:
            out["exact_match"] = 100.0 * self.exact_match
        if self.example_f1 is not None:
            out["example_f1"] = 100.0 * self.example_f1
        return out


def _prf(tp: int, fp: int, fn: int) -> tuple[float, float, float]:
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1


def _single_label_report(task: str, gold: list, pred: list, classes: list) -> EvalReport:
    per_class: dict[str, ClassScores] = {}
    total_tp = total_fp = total_fn = 0
    for cls in classes:
        tp = sum(1 for g, p in zip(gold, pred) if g == cls and p == cls)
        fp = sum(1 for g, p in zip(gold, pred) if g != cls and p == cls)
        fn = sum(1 for g, p in zip(gold, pred) if g == cls and p != cls)
        precision, recall, f1 = _prf(tp, fp, fn)
        name = cls.value if isinstance(cls, TDLabel) else str(cls)
        per_class[name] = ClassScores(precision, recall, f1, support=tp + fn)
        total_tp, total_fp, total_fn = total_tp + tp, total_fp + fp, total_fn + fn
    macro = sum(s.f1 for s in per_class.values()) / len(per_class)
    _, _, micro = _prf(total_tp, total_fp, total_fn)
    return EvalReport(
        task=task,
        n_examples=len(gold),
        per_class=per_class,
        macro_f1=macro,
        micro_f1=micro,
    )


def evaluate(gold, pred, task: str) -> EvalReport:
    """Score aligned gold/pred lists for the given task."""
    if task not in TASKS:
        raise ValueError(f"unknown task {task!r}; expected one of {TASKS}")
    gold = list(gold)
    pred = list(pred)
    if len(gold) != len(pred):
        raise ValueError(f"gold/pred length mismatch: {len(gold)} vs {len(pred)}")
    if not gold:
        raise ValueError("nothing to evaluate")

    if task == "identification":
        g = [_POSITIVE if l is not TDLabel.NON_SATD else _NEGATIVE for l in gold]
        p = [_POSITIVE if l is not TDLabel.NON_SATD else _NEGATIVE for l in pred]
        return _single_label_report(task, g, p, [_POSITIVE, _NEGATIVE])

    if task == "classification":
        bad = [l for l in list(gold) + list(pred) if l not in TD_TYPES]
        if bad:
            raise ValueError(f"classification is over the five debt types; got {bad[:3]}")
        return _single_label_report(task, gold, pred, list(TD_TYPES))

    if task == "detection":
        return _single_label_report(task, gold, pred, list(ALL_LABELS))

    # code_multilabel
    gsets = [frozenset(g) for g in gold]
    psets = [frozenset(p) for p in pred]
    per_class: dict[str, ClassScores] = {}
    total_tp = total_fp = total_fn = 0
    for cls in TD_TYPES[:4]:
        tp = sum(1 for g, p in zip(gsets, psets) if cls in g and cls in p)
        fp = sum(1 for g, p in zip(gsets, psets) if cls not in g and cls in p)
        fn = sum(1 for g, p in zip(gsets, psets) if cls in g and cls not in p)
        precision, recall, f1 = _prf(tp, fp, fn)
        per_class[cls.value] = ClassScores(precision, recall, f1, support=tp + fn)
        total_tp, total_fp, total_fn = total_tp + tp, total_fp + fp, total_fn + fn
    macro = sum(s.f1 for s in per_class.values()) / len(per_class)
    _, _, micro = _prf(total_tp, total_fp, total_fn)
    em = sum(1 for g, p in zip(gsets, psets) if g == p) / len(gsets)
    example_scores = []
    for g, p in zip(gsets, psets):
        if not g and not p:
            example_scores.append(1.0)
        else:
            example_scores.append(2 * len(g & p) / (len(g) + len(p)))
    return EvalReport(
        task=task,
        n_examples=len(gsets),
        per_class=per_class,
        macro_f1=macro,
        micro_f1=micro,
        exact_match=em,
        example_f1=sum(example_scores) / len(example_scores),
    )


@dataclass
class FoldedEvalReport:
    task: str
    per_fold: dict[int, EvalReport] = field(default_factory=dict)
    mean: dict[str, float] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "task": self.task,
            "per_fold": {str(k): v.to_json() for k, v in self.per_fold.items()},
            "mean": {k: 100.0 * v for k, v in self.mean.items()},
        }


def evaluate_folds(gold, pred, fold_ids: list[int], task: str) -> FoldedEvalReport:
    """Per-fold reports plus the across-fold means of the headline scores."""
    gold = list(gold)
    pred = list(pred)
    if not (len(gold) == len(pred) == len(fold_ids)):
        raise ValueError("gold, pred and fold_ids must align")
    report = FoldedEvalReport(task=task)
    for fold in sorted(set(fold_ids)):
        g = [x for x, f in zip(gold, fold_ids) if f == fold]
        p = [x for x, f in zip(pred, fold_ids) if f == fold]
        report.per_fold[fold] = evaluate(g, p, task)
    folds = list(report.per_fold.values())
    report.mean["macro_f1"] = sum(r.macro_f1 for r in folds) / len(folds)
    report.mean["micro_f1"] = sum(r.micro_f1 for r in folds) / len(folds)
    if task == "code_multilabel":
        report.mean["exact_match"] = sum(r.exact_match for r in folds) / len(folds)
        report.mean["example_f1"] = sum(r.example_f1 for r in folds) / len(folds)
    return report
