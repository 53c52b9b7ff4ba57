"""JSON schemas for the pipeline's file artifacts, used by the CLI to
validate its own output and by the acceptance suite."""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from satdkit.labels import ALL_LABELS, TD_TYPES
from satdkit.util import read_jsonl

_LABEL_ENUM = [l.value for l in ALL_LABELS]
_TYPE_ENUM = [l.value for l in TD_TYPES]

_COMMENT_SCHEMA = {
    "type": "object",
    "required": ["id", "raw", "clean", "start_line", "end_line", "kind", "position"],
    "properties": {
        "id": {"type": "string"},
        "raw": {"type": "string"},
        "clean": {"type": "string"},
        "start_line": {"type": "integer", "minimum": 1},
        "end_line": {"type": "integer", "minimum": 1},
        "kind": {"enum": ["line", "block"]},
        "position": {"enum": ["leading", "inner"]},
    },
}

ROW_SCHEMAS: dict[str, dict] = {
    "functions": {
        "type": "object",
        "required": ["id", "repo", "path", "name", "signature", "start_line", "end_line", "body", "comments"],
        "properties": {
            "id": {"type": "string"},
            "repo": {"type": "string"},
            "path": {"type": "string"},
            "name": {"type": "string"},
            "signature": {"type": "string"},
            "start_line": {"type": "integer", "minimum": 1},
            "end_line": {"type": "integer", "minimum": 1},
            "body": {"type": "string"},
            "comments": {"type": "array", "items": _COMMENT_SCHEMA},
        },
    },
    "predictions": {
        "type": "object",
        "required": ["comment_id", "function_id", "comment", "probabilities", "predicted", "entropy"],
        "properties": {
            "comment_id": {"type": "string"},
            "function_id": {"type": "string"},
            "comment": {"type": "string"},
            "probabilities": {
                "type": "object",
                "additionalProperties": {"type": "number", "minimum": 0, "maximum": 1},
            },
            "predicted": {"type": "array", "items": {"enum": _TYPE_ENUM}},
            "entropy": {"type": "number", "minimum": 0},
        },
    },
    "sample": {
        "type": "object",
        "required": ["kind"],
        "oneOf": [
            {
                "properties": {"kind": {"const": "selected_function"}, "function_id": {"type": "string"}},
                "required": ["kind", "function_id"],
            },
            {
                "properties": {
                    "kind": {"const": "candidate"},
                    "comment_id": {"type": "string"},
                    "function_id": {"type": "string"},
                    "branch": {"enum": ["Q", "Q_hat", "rest"]},
                    "entropy": {"type": ["number", "null"]},
                    "rank": {"type": ["integer", "null"]},
                    "selected": {"type": "boolean"},
                },
                "required": ["kind", "comment_id", "function_id", "branch", "selected"],
            },
        ],
    },
    "finals": {
        "type": "object",
        "required": ["comment_id", "final_label"],
        "properties": {
            "comment_id": {"type": "string"},
            "final_label": {"enum": _LABEL_ENUM},
            "provenance": {"type": "object"},
        },
    },
    "comment_dataset": {
        "type": "object",
        "required": ["id", "comment", "context", "scope", "label", "project"],
        "properties": {
            "id": {"type": "string"},
            "comment": {"type": "string"},
            "context": {"type": "string"},
            "scope": {"type": "string"},
            "label": {"enum": _LABEL_ENUM},
            "project": {"type": "string"},
        },
    },
    "code_dataset": {
        "type": "object",
        "required": ["id", "code", "labels", "project"],
        "properties": {
            "id": {"type": "string"},
            "code": {"type": "string"},
            "labels": {"type": "array", "items": {"enum": _TYPE_ENUM[:4]}},
            "project": {"type": "string"},
        },
    },
    "ensemble": {
        "type": "object",
        "required": ["id", "label"],
        "properties": {"id": {"type": "string"}, "label": {"enum": _LABEL_ENUM}},
    },
}

DOC_SCHEMAS: dict[str, dict] = {
    "folds": {
        "type": "object",
        "required": ["folds"],
        "properties": {
            "folds": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}}
        },
    },
    "eval_report": {
        "type": "object",
        "required": ["report"],
        "properties": {
            "report": {
                "type": "object",
                "required": ["task"],
                "properties": {"task": {"type": "string"}},
            }
        },
    },
    "stats": {
        "type": "object",
        "required": ["report"],
        "properties": {"report": {"type": "object"}},
    },
    "model": {
        "type": "object",
        "required": ["format_version", "seed", "dataset_hash", "positive_class", "vocabulary", "idf", "weights", "bias"],
        "properties": {
            "format_version": {"type": "integer"},
            "seed": {"type": "integer"},
            "dataset_hash": {"type": "string"},
            "positive_class": {"type": "string"},
            "vocabulary": {"type": "array", "items": {"type": "string"}},
            "idf": {"type": "array", "items": {"type": "number"}},
            "weights": {"type": "array", "items": {"type": "number"}},
            "bias": {"type": "number"},
        },
    },
}


class SchemaError(ValueError):
    pass


def validate_jsonl(path: str | Path, kind: str) -> int:
    """Validate every data row of a JSONL artifact; returns the row count."""
    schema = ROW_SCHEMAS[kind]
    validator = jsonschema.Draft7Validator(schema)
    n = 0
    for i, row in enumerate(read_jsonl(path), start=1):
        errors = sorted(validator.iter_errors(row), key=str)
        if errors:
            raise SchemaError(f"{path}: row {i} fails {kind} schema: {errors[0].message}")
        n += 1
    return n


def validate_json(path: str | Path, kind: str) -> None:
    schema = DOC_SCHEMAS[kind]
    blob = json.loads(Path(path).read_text(encoding="utf-8"))
    validator = jsonschema.Draft7Validator(schema)
    errors = sorted(validator.iter_errors(blob), key=str)
    if errors:
        raise SchemaError(f"{path}: fails {kind} schema: {errors[0].message}")
