"""HTTP/JSON API over the task store for the annotation UI.

Blinding rule: while a task is still open (ASSIGNED or PARTIAL), responses
only ever reveal the requesting annotator's own label; the pair of labels
appears once the task reaches AGREED/CONFLICT/AUDITED. All metric numbers
are computed here and passed to clients as-is.
"""

from __future__ import annotations

from fastapi import FastAPI, Header, HTTPException, Query
from pydantic import BaseModel

from satdkit.annotation.agreement import agreement_report
from satdkit.annotation.store import TaskStore
from satdkit.annotation.tasks import (
    AnnotationTask,
    AuthorizationError,
    DuplicateSubmissionError,
    StateError,
    TaskState,
)
from satdkit.dataset.context import STANDARD_LINE_SCOPES, ContextScope, extract_context
from satdkit.extract.functions import CommentUnit, FunctionUnit
from satdkit.labels import ALL_LABELS, TDLabel


class LabelSubmission(BaseModel):
    annotator: str
    label: str


class Resolution(BaseModel):
    label: str
    note: str = ""


OPEN_STATES = (TaskState.ASSIGNED, TaskState.PARTIAL)


def task_view(task: AnnotationTask, annotator: str | None) -> dict:
    """Serialize a task, hiding labels on open tasks except the caller's own."""
    completed = task.state not in OPEN_STATES
    view = {
        "task_id": task.task_id,
        "comment_id": task.comment_id,
        "state": task.state.value,
        "phase": task.phase,
        "annotators": list(task.annotators),
        "my_label": None,
        "labels": None,
        "final_label": task.final_label.value if task.final_label else None,
        "audit_note": task.audit_note,
    }
    if annotator is not None and annotator in task.annotators:
        own = task.label_of(annotator)
        view["my_label"] = own.value if own else None
    if completed:
        view["labels"] = {
            task.annotator_a: task.label_a.value if task.label_a else None,
            task.annotator_b: task.label_b.value if task.label_b else None,
        }
    return view


def create_app(
    store: TaskStore,
    functions: list[FunctionUnit] | None = None,
) -> FastAPI:
    app = FastAPI(title="satdkit annotation service")
    functions = functions or []
    fn_by_id: dict[str, FunctionUnit] = {fn.id: fn for fn in functions}
    comment_index: dict[str, tuple[CommentUnit, FunctionUnit]] = {}
    for fn in functions:
        for c in fn.comments:
            comment_index[c.id] = (c, fn)

    def parse_td_label(text: str) -> TDLabel:
        try:
            return TDLabel(text)
        except ValueError:
            valid = ", ".join(l.value for l in ALL_LABELS)
            raise HTTPException(status_code=422, detail=f"invalid label {text!r}; one of: {valid}")

    def caller(
        annotator: str | None, header: str | None
    ) -> str | None:
        return annotator or header

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "tasks": len(store.tasks)}

    @app.get("/tasks")
    def list_tasks(
        annotator: str | None = Query(default=None),
        state: str | None = Query(default=None),
        x_annotator_id: str | None = Header(default=None),
    ) -> list[dict]:
        who = caller(annotator, x_annotator_id)
        state_filter = None
        if state:
            try:
                state_filter = TaskState(state.upper())
            except ValueError:
                raise HTTPException(status_code=422, detail=f"invalid state {state!r}")
        tasks = store.list(annotator=who, state=state_filter)
        return [task_view(t, who) for t in tasks]

    @app.get("/tasks/{task_id}")
    def get_task(
        task_id: str,
        annotator: str | None = Query(default=None),
        x_annotator_id: str | None = Header(default=None),
    ) -> dict:
        who = caller(annotator, x_annotator_id)
        try:
            task = store.get(task_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no such task: {task_id}")
        view = task_view(task, who)
        resolved = comment_index.get(task.comment_id)
        if resolved is not None:
            comment, fn = resolved
            contexts = {
                str(k): extract_context(comment, fn, ContextScope.lines(k))
                for k in STANDARD_LINE_SCOPES
            }
            contexts["full"] = extract_context(comment, fn, ContextScope.full())
            view["payload"] = {
                "comment": comment.to_json(),
                "function": {
                    "id": fn.id,
                    "name": fn.name,
                    "signature": fn.signature,
                    "repo": fn.repo_id,
                    "path": fn.path,
                    "start_line": fn.start_line,
                    "end_line": fn.end_line,
                    "body": fn.body_text,
                },
                "contexts": contexts,
            }
        return view

    @app.post("/tasks/{task_id}/label")
    def post_label(task_id: str, submission: LabelSubmission) -> dict:
        label = parse_td_label(submission.label)
        try:
            task = store.submit(task_id, submission.annotator, label)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no such task: {task_id}")
        except AuthorizationError as exc:
            raise HTTPException(status_code=403, detail=str(exc))
        except (DuplicateSubmissionError, StateError) as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        return task_view(task, submission.annotator)

    @app.get("/conflicts")
    def conflicts() -> list[dict]:
        out = []
        for task in store.conflicts():
            view = task_view(task, None)
            view["labels"] = {
                task.annotator_a: task.label_a.value,
                task.annotator_b: task.label_b.value,
            }
            out.append(view)
        return out

    @app.post("/tasks/{task_id}/resolve")
    def resolve(task_id: str, resolution: Resolution) -> dict:
        label = parse_td_label(resolution.label)
        try:
            task = store.resolve(task_id, label, resolution.note)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no such task: {task_id}")
        except StateError as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        return task_view(task, None)

    @app.get("/metrics")
    def metrics(phase: int | None = Query(default=None)) -> dict:
        done = [t for t in store.list() if t.both_labeled()]
        if phase is not None:
            done = [t for t in done if t.phase == phase]
        if not done:
            return {"n_items": 0, "raw_agreement": None, "kappa": None, "band": None}
        return agreement_report(done).to_json()

    @app.get("/finals")
    def finals() -> list[dict]:
        return store.finals()

    return app
