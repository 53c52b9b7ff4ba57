"""Two-annotator task lifecycle.

State machine: ASSIGNED -> PARTIAL -> AGREED | CONFLICT, CONFLICT -> AUDITED.
Submitted labels are never erased; the audit step adds a consensus label on
top of the original pair, so agreement metrics stay computable on the
pre-audit labels.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from satdkit.labels import TDLabel
from satdkit.util import stable_id


class TaskState(str, Enum):
    ASSIGNED = "ASSIGNED"
    PARTIAL = "PARTIAL"
    AGREED = "AGREED"
    CONFLICT = "CONFLICT"
    AUDITED = "AUDITED"


class WorkflowError(Exception):
    pass


class AuthorizationError(WorkflowError):
    pass


class DuplicateSubmissionError(WorkflowError):
    pass


class StateError(WorkflowError):
    pass


@dataclass
class AnnotationTask:
    task_id: str
    comment_id: str
    annotator_a: str
    annotator_b: str
    label_a: TDLabel | None = None
    label_b: TDLabel | None = None
    state: TaskState = TaskState.ASSIGNED
    final_label: TDLabel | None = None
    audit_note: str | None = None
    phase: int = 1
    created_at: float = field(default_factory=time.time)
    updated_at: float = field(default_factory=time.time)

    @property
    def annotators(self) -> tuple[str, str]:
        return (self.annotator_a, self.annotator_b)

    def label_of(self, annotator: str) -> TDLabel | None:
        if annotator == self.annotator_a:
            return self.label_a
        if annotator == self.annotator_b:
            return self.label_b
        return None

    def both_labeled(self) -> bool:
        return self.label_a is not None and self.label_b is not None

    def to_json(self) -> dict:
        return {
            "task_id": self.task_id,
            "comment_id": self.comment_id,
            "annotator_a": self.annotator_a,
            "annotator_b": self.annotator_b,
            "label_a": self.label_a.value if self.label_a else None,
            "label_b": self.label_b.value if self.label_b else None,
            "state": self.state.value,
            "final_label": self.final_label.value if self.final_label else None,
            "audit_note": self.audit_note,
            "phase": self.phase,
            "created_at": self.created_at,
            "updated_at": self.updated_at,
        }

    @classmethod
    def from_json(cls, row: dict) -> "AnnotationTask":
        return cls(
            task_id=row["task_id"],
            comment_id=row["comment_id"],
            annotator_a=row["annotator_a"],
            annotator_b=row["annotator_b"],
            label_a=TDLabel(row["label_a"]) if row.get("label_a") else None,
            label_b=TDLabel(row["label_b"]) if row.get("label_b") else None,
            state=TaskState(row.get("state", "ASSIGNED")),
            final_label=TDLabel(row["final_label"]) if row.get("final_label") else None,
            audit_note=row.get("audit_note"),
            phase=int(row.get("phase", 1)),
            created_at=float(row.get("created_at", 0.0)),
            updated_at=float(row.get("updated_at", 0.0)),
        )


def assign(
    comment_ids: list[str],
    annotators: list[str],
    seed: int = 0,
    phase: int = 1,
    balance: bool = True,
) -> list[AnnotationTask]:
    """Give every comment two distinct annotators.

    With balance=True (the default) each comment goes to the two currently
    least-loaded annotators with seeded random tie-breaking, so the workload
    spread never exceeds one task and divides out exactly when it can (e.g.
    1400 comments over 7 annotators is 400 apiece). balance=False draws
    uniform pairs instead.
    """
    annotators = list(dict.fromkeys(annotators))
    if len(annotators) < 2:
        raise ValueError("need at least two distinct annotators")
    rng = random.Random(seed)
    loads: Counter[str] = Counter({a: 0 for a in annotators})
    tasks: list[AnnotationTask] = []
    for comment_id in comment_ids:
        if balance:
            order = list(annotators)
            rng.shuffle(order)
            order.sort(key=lambda a: loads[a])
            pair = order[:2]
        else:
            pair = rng.sample(annotators, 2)
        loads[pair[0]] += 1
        loads[pair[1]] += 1
        tasks.append(
            AnnotationTask(
                task_id=stable_id("task", comment_id),
                comment_id=comment_id,
                annotator_a=pair[0],
                annotator_b=pair[1],
                phase=phase,
            )
        )
    return tasks


def workload(tasks: list[AnnotationTask]) -> Counter:
    loads: Counter[str] = Counter()
    for t in tasks:
        loads[t.annotator_a] += 1
        loads[t.annotator_b] += 1
    return loads


def submit_label(task: AnnotationTask, annotator_id: str, label: TDLabel) -> AnnotationTask:
    """Record one annotator's label; runs the cross-check once both are in."""
    if annotator_id not in task.annotators:
        raise AuthorizationError(
            f"annotator {annotator_id!r} is not assigned to task {task.task_id}"
        )
    if task.label_of(annotator_id) is not None:
        raise DuplicateSubmissionError(
            f"annotator {annotator_id!r} already submitted on task {task.task_id}"
        )
    if task.state in (TaskState.AGREED, TaskState.CONFLICT, TaskState.AUDITED):
        raise StateError(f"task {task.task_id} is already complete ({task.state.value})")
    if annotator_id == task.annotator_a:
        task.label_a = label
    else:
        task.label_b = label
    task.updated_at = time.time()
    if task.both_labeled():
        cross_check(task)
    else:
        task.state = TaskState.PARTIAL
    return task


def cross_check(task: AnnotationTask) -> TaskState:
    """Compare the two labels: agreement finalizes, disagreement queues audit."""
    if not task.both_labeled():
        raise StateError(f"task {task.task_id} does not have both labels yet")
    if task.label_a == task.label_b:
        task.state = TaskState.AGREED
        task.final_label = task.label_a
    else:
        task.state = TaskState.CONFLICT
    task.updated_at = time.time()
    return task.state


def resolve_audit(task: AnnotationTask, consensus_label: TDLabel, note: str = "") -> AnnotationTask:
    """Settle a conflict with the discussed consensus label."""
    if task.state is not TaskState.CONFLICT:
        raise StateError(
            f"task {task.task_id} is {task.state.value}, only CONFLICT tasks can be resolved"
        )
    task.final_label = consensus_label
    task.audit_note = note
    task.state = TaskState.AUDITED
    task.updated_at = time.time()
    return task
