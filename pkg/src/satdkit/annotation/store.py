"""Durable task storage: append-only event log with optional snapshots.

Every mutation is validated, appended to the log and fsynced BEFORE the
in-memory state changes, so a kill-and-restart never loses an acknowledged
submission. Replay tolerates a torn final line (a crash mid-append).
"""

from __future__ import annotations

import json
import os
import threading
import time
from pathlib import Path

from satdkit.annotation.tasks import (
    AnnotationTask,
    StateError,
    TaskState,
    resolve_audit,
    submit_label,
)
from satdkit.labels import TDLabel


class TaskStore:
    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.tasks: dict[str, AnnotationTask] = {}
        self._lock = threading.Lock()
        self.path.parent.mkdir(parents=True, exist_ok=True)
        if self.path.exists():
            self._replay()
        self._fh = open(self.path, "a", encoding="utf-8")

    # -- persistence ------------------------------------------------------

    def _replay(self) -> None:
        lines = self.path.read_text(encoding="utf-8").splitlines()
        for i, line in enumerate(lines):
            if not line.strip():
                continue
            try:
                event = json.loads(line)
            except json.JSONDecodeError:
                if i == len(lines) - 1:
                    break  # torn tail from a crash mid-append
                raise
            self._apply(event)

    def _append(self, event: dict) -> None:
        self._fh.write(json.dumps(event, ensure_ascii=False) + "\n")
        self._fh.flush()
        os.fsync(self._fh.fileno())

    def _apply(self, event: dict) -> AnnotationTask | None:
        kind = event["type"]
        if kind == "snapshot":
            self.tasks = {
                row["task_id"]: AnnotationTask.from_json(row) for row in event["tasks"]
            }
            return None
        if kind == "assign":
            task = AnnotationTask.from_json(event["task"])
            self.tasks[task.task_id] = task
            return task
        if kind == "submit":
            task = self.tasks[event["task_id"]]
            return submit_label(task, event["annotator"], TDLabel(event["label"]))
        if kind == "resolve":
            task = self.tasks[event["task_id"]]
            return resolve_audit(task, TDLabel(event["label"]), event.get("note", ""))
        raise ValueError(f"unknown event type {kind!r}")

    def snapshot(self) -> None:
        """Fold the log into one snapshot event (compaction)."""
        with self._lock:
            event = {
                "type": "snapshot",
                "ts": time.time(),
                "tasks": [t.to_json() for t in self.tasks.values()],
            }
            tmp = self.path.with_suffix(self.path.suffix + ".tmp")
            with open(tmp, "w", encoding="utf-8") as fh:
                fh.write(json.dumps(event, ensure_ascii=False) + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            self._fh.close()
            os.replace(tmp, self.path)
            self._fh = open(self.path, "a", encoding="utf-8")

    def close(self) -> None:
        self._fh.close()

    # -- mutations (write-ahead, then apply) ------------------------------

    def add_tasks(self, tasks: list[AnnotationTask]) -> None:
        with self._lock:
            for task in tasks:
                if task.task_id in self.tasks:
                    raise StateError(f"task {task.task_id} already exists")
            for task in tasks:
                self._append({"type": "assign", "task": task.to_json()})
                self.tasks[task.task_id] = task

    def submit(self, task_id: str, annotator: str, label: TDLabel) -> AnnotationTask:
        with self._lock:
            task = self._get(task_id)
            # validate against a copy so a rejected event is never logged
            probe = AnnotationTask.from_json(task.to_json())
            submit_label(probe, annotator, label)
            self._append(
                {"type": "submit", "task_id": task_id, "annotator": annotator, "label": label.value}
            )
            return submit_label(task, annotator, label)

    def resolve(self, task_id: str, label: TDLabel, note: str = "") -> AnnotationTask:
        with self._lock:
            task = self._get(task_id)
            probe = AnnotationTask.from_json(task.to_json())
            resolve_audit(probe, label, note)
            self._append({"type": "resolve", "task_id": task_id, "label": label.value, "note": note})
            return resolve_audit(task, label, note)

    # -- queries -----------------------------------------------------------

    def _get(self, task_id: str) -> AnnotationTask:
        task = self.tasks.get(task_id)
        if task is None:
            raise KeyError(f"no such task: {task_id}")
        return task

    def get(self, task_id: str) -> AnnotationTask:
        return self._get(task_id)

    def list(
        self, annotator: str | None = None, state: TaskState | None = None
    ) -> list[AnnotationTask]:
        out = []
        for task in self.tasks.values():
            if annotator is not None and annotator not in task.annotators:
                continue
            if state is not None and task.state is not state:
                continue
            out.append(task)
        return sorted(out, key=lambda t: t.task_id)

    def conflicts(self) -> list[AnnotationTask]:
        return self.list(state=TaskState.CONFLICT)

    def finals(self) -> list[dict]:
        """Final labels (agreed or audited) with provenance."""
        rows = []
        for task in self.list():
            if task.final_label is None:
                continue
            rows.append(
                {
                    "comment_id": task.comment_id,
                    "final_label": task.final_label.value,
                    "provenance": {
                        "task_id": task.task_id,
                        "state": task.state.value,
                        "phase": task.phase,
                        "annotators": list(task.annotators),
                        "original_labels": [
                            task.label_a.value if task.label_a else None,
                            task.label_b.value if task.label_b else None,
                        ],
                        "audit_note": task.audit_note,
                    },
                }
            )
        return rows
