import pytest

from satdkit.annotation.agreement import cohen_kappa, raw_agreement
from satdkit.annotation.store import TaskStore
from satdkit.annotation.tasks import (
    AuthorizationError,
    DuplicateSubmissionError,
    StateError,
    TaskState,
    assign,
    resolve_audit,
    submit_label,
    workload,
)
from satdkit.labels import TDLabel


def test_assign_balances_load_exactly():
    comments = [f"c{i}" for i in range(1400)]
    annotators = [f"a{i}" for i in range(7)]
    tasks = assign(comments, annotators, seed=0)
    loads = workload(tasks)
    assert all(loads[a] == 400 for a in annotators)
    for t in tasks:
        assert t.annotator_a != t.annotator_b


def test_assign_requires_two_annotators():
    with pytest.raises(ValueError):
        assign(["c1"], ["only-one"], seed=0)


def test_assign_is_seed_deterministic():
    comments = [f"c{i}" for i in range(50)]
    annotators = ["a", "b", "c"]
    pairs1 = [(t.annotator_a, t.annotator_b) for t in assign(comments, annotators, seed=4)]
    pairs2 = [(t.annotator_a, t.annotator_b) for t in assign(comments, annotators, seed=4)]
    pairs3 = [(t.annotator_a, t.annotator_b) for t in assign(comments, annotators, seed=5)]
    assert pairs1 == pairs2
    assert pairs1 != pairs3


def fresh_task():
    [t] = assign(["c1"], ["alice", "bob"], seed=1)
    return t


def test_first_label_goes_partial():
    t = fresh_task()
    submit_label(t, t.annotator_a, TDLabel.DESIGN)
    assert t.state is TaskState.PARTIAL
    assert t.final_label is None


def test_matching_labels_agree():
    t = fresh_task()
    submit_label(t, t.annotator_a, TDLabel.DESIGN)
    submit_label(t, t.annotator_b, TDLabel.DESIGN)
    assert t.state is TaskState.AGREED
    assert t.final_label is TDLabel.DESIGN


def test_mismatched_labels_conflict():
    t = fresh_task()
    submit_label(t, t.annotator_a, TDLabel.DESIGN)
    submit_label(t, t.annotator_b, TDLabel.DEFECT)
    assert t.state is TaskState.CONFLICT
    assert t.final_label is None


def test_wrong_annotator_rejected():
    t = fresh_task()
    with pytest.raises(AuthorizationError):
        submit_label(t, "mallory", TDLabel.DESIGN)


def test_double_submit_rejected():
    t = fresh_task()
    submit_label(t, t.annotator_a, TDLabel.DESIGN)
    with pytest.raises(DuplicateSubmissionError):
        submit_label(t, t.annotator_a, TDLabel.TEST)


def test_resolve_conflict():
    t = fresh_task()
    submit_label(t, t.annotator_a, TDLabel.DESIGN)
    submit_label(t, t.annotator_b, TDLabel.DEFECT)
    resolve_audit(t, TDLabel.DESIGN, note="discussed")
    assert t.state is TaskState.AUDITED
    assert t.final_label is TDLabel.DESIGN
    # the original pair survives the audit
    assert (t.label_a, t.label_b) == (TDLabel.DESIGN, TDLabel.DEFECT)


def test_resolve_agreed_task_rejected():
    t = fresh_task()
    submit_label(t, t.annotator_a, TDLabel.TEST)
    submit_label(t, t.annotator_b, TDLabel.TEST)
    with pytest.raises(StateError):
        resolve_audit(t, TDLabel.DESIGN)


def test_metrics_unchanged_by_audits():
    tasks = assign([f"c{i}" for i in range(4)], ["alice", "bob"], seed=2)
    labels = [
        (TDLabel.DESIGN, TDLabel.DESIGN),
        (TDLabel.TEST, TDLabel.TEST),
        (TDLabel.DEFECT, TDLabel.DESIGN),
        (TDLabel.DEFECT, TDLabel.TEST),
    ]
    for t, (la, lb) in zip(tasks, labels):
        submit_label(t, t.annotator_a, la)
        submit_label(t, t.annotator_b, lb)
    before = (raw_agreement(tasks), cohen_kappa(tasks).kappa)
    for t in tasks:
        if t.state is TaskState.CONFLICT:
            resolve_audit(t, TDLabel.DEFECT, "consensus")
    after = (raw_agreement(tasks), cohen_kappa(tasks).kappa)
    assert before == after


# ---------------------------------------------------------------------------
# persistence
# ---------------------------------------------------------------------------


def test_store_survives_restart(tmp_path):
    path = tmp_path / "store.jsonl"
    store = TaskStore(path)
    tasks = assign(["c1", "c2"], ["alice", "bob"], seed=0)
    store.add_tasks(tasks)
    t1 = tasks[0].task_id
    store.submit(t1, tasks[0].annotator_a, TDLabel.DESIGN)
    store.submit(t1, tasks[0].annotator_b, TDLabel.DEFECT)
    store.close()

    reopened = TaskStore(path)
    t = reopened.get(t1)
    assert t.state is TaskState.CONFLICT
    assert (t.label_a, t.label_b) == (TDLabel.DESIGN, TDLabel.DEFECT)
    reopened.resolve(t1, TDLabel.DESIGN, "post-restart audit")
    reopened.close()

    third = TaskStore(path)
    assert third.get(t1).state is TaskState.AUDITED
    assert third.get(t1).final_label is TDLabel.DESIGN


def test_store_tolerates_torn_tail(tmp_path):
    path = tmp_path / "store.jsonl"
    store = TaskStore(path)
    tasks = assign(["c1"], ["alice", "bob"], seed=0)
    store.add_tasks(tasks)
    store.submit(tasks[0].task_id, tasks[0].annotator_a, TDLabel.TEST)
    store.close()
    with open(path, "a", encoding="utf-8") as fh:
        fh.write('{"type": "submit", "task_id": "x", "anno')  # crash mid-append
    reopened = TaskStore(path)
    assert reopened.get(tasks[0].task_id).label_a is TDLabel.TEST


def test_rejected_submission_is_not_logged(tmp_path):
    path = tmp_path / "store.jsonl"
    store = TaskStore(path)
    tasks = assign(["c1"], ["alice", "bob"], seed=0)
    store.add_tasks(tasks)
    tid = tasks[0].task_id
    store.submit(tid, tasks[0].annotator_a, TDLabel.TEST)
    with pytest.raises(DuplicateSubmissionError):
        store.submit(tid, tasks[0].annotator_a, TDLabel.DESIGN)
    store.close()
    reopened = TaskStore(path)  # replay must not explode on a bad event
    assert reopened.get(tid).label_a is TDLabel.TEST
    assert reopened.get(tid).state is TaskState.PARTIAL


def test_snapshot_compaction(tmp_path):
    path = tmp_path / "store.jsonl"
    store = TaskStore(path)
    tasks = assign([f"c{i}" for i in range(5)], ["alice", "bob"], seed=0)
    store.add_tasks(tasks)
    for t in tasks:
        store.submit(t.task_id, t.annotator_a, TDLabel.DESIGN)
    store.snapshot()
    store.submit(tasks[0].task_id, tasks[0].annotator_b, TDLabel.DESIGN)
    store.close()
    reopened = TaskStore(path)
    assert reopened.get(tasks[0].task_id).state is TaskState.AGREED
    assert len(reopened.tasks) == 5


def test_finals_have_provenance(tmp_path):
    store = TaskStore(tmp_path / "s.jsonl")
    tasks = assign(["c1"], ["alice", "bob"], seed=0)
    store.add_tasks(tasks)
    tid = tasks[0].task_id
    store.submit(tid, tasks[0].annotator_a, TDLabel.TEST)
    store.submit(tid, tasks[0].annotator_b, TDLabel.TEST)
    [row] = store.finals()
    assert row["comment_id"] == "c1"
    assert row["final_label"] == "TEST"
    assert row["provenance"]["state"] == "AGREED"
    assert row["provenance"]["original_labels"] == ["TEST", "TEST"]
