from satdkit.annotation.agreement import (
    AgreementReport,
    KappaResult,
    agreement_report,
    cohen_kappa,
    kappa_from_table,
    landis_koch_band,
    raw_agreement,
)
from satdkit.annotation.store import TaskStore
from satdkit.annotation.tasks import (
    AnnotationTask,
    AuthorizationError,
    DuplicateSubmissionError,
    StateError,
    TaskState,
    WorkflowError,
    assign,
    cross_check,
    resolve_audit,
    submit_label,
    workload,
)

__all__ = [
    "AnnotationTask",
    "TaskState",
    "WorkflowError",
    "AuthorizationError",
    "DuplicateSubmissionError",
    "StateError",
    "assign",
    "submit_label",
    "cross_check",
    "resolve_audit",
    "workload",
    "TaskStore",
    "raw_agreement",
    "cohen_kappa",
    "kappa_from_table",
    "landis_koch_band",
    "AgreementReport",
    "KappaResult",
    "agreement_report",
]
