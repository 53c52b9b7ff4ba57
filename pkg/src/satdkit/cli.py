"""Command-line entry point wiring the pipeline stages.

Every artifact starts with a provenance header line carrying the tool
version, config hash and seed; set SOURCE_DATE_EPOCH to pin the header
timestamp for byte-reproducible runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from satdkit import __version__
from satdkit.annotation.store import TaskStore
from satdkit.annotation.tasks import TaskState, assign, workload
from satdkit.classify.cleaning import clean_comment
from satdkit.classify.model import ClassifierConfig, ClassifierModel
from satdkit.classify.predict import predict
from satdkit.classify.train import train_binary, train_type_classifiers
from satdkit.config import PipelineConfig
from satdkit.dataset.build import (
    build_code_dataset,
    build_comment_dataset,
    dedup_rows,
)
from satdkit.dataset.context import ContextScope
from satdkit.dataset.folds import FoldSplit, cross_project_folds
from satdkit.dataset.stats import render_figures, stats_report, write_stats_csv
from satdkit.extract.corpus import scan_corpus
from satdkit.extract.functions import FunctionUnit, extract_file, function_from_json
from satdkit.fusion.embed import embed_tokens, fusion_tokens
from satdkit.fusion.ensemble import majority_vote
from satdkit.fusion.fuse import code_att, str_concat
from satdkit.fusion.metrics import evaluate, evaluate_folds
from satdkit.labels import CODE_TD_LABELS, TD_TYPES, TDLabel, parse_label
from satdkit.sampling import Triplet, build_candidates, sample_functions
from satdkit.schemas import validate_json, validate_jsonl
from satdkit.synth import keyword_rule_label, synth_comment_corpus
from satdkit.util import artifact_header, read_jsonl, write_jsonl


def _load_functions(path: str | Path) -> list[FunctionUnit]:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(f"input file not found: {p}")
    return [function_from_json(row) for row in read_jsonl(p)]


def _require(path: str | Path) -> Path:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(f"input file not found: {p}")
    return p


def _load_model_bundle(path: Path) -> tuple[dict[TDLabel, ClassifierModel], ClassifierModel | None]:
    """A models directory holds one file per type head plus detector.json."""
    models: dict[TDLabel, ClassifierModel] = {}
    for td in TD_TYPES:
        f = path / f"{td.value.lower()}.json"
        if not f.exists():
            raise FileNotFoundError(f"model file not found: {f}")
        models[td] = ClassifierModel.load(f)
    detector_path = path / "detector.json"
    detector = ClassifierModel.load(detector_path) if detector_path.exists() else None
    return models, detector


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def cmd_extract(args) -> int:
    result = scan_corpus(args.root, set(args.ext))
    rows = []
    parse_skips = []
    n_diags = 0
    for sf in result.files:
        extraction = extract_file(sf)
        if extraction.skipped:
            parse_skips.extend(extraction.diagnostics)
            continue
        n_diags += len(extraction.diagnostics)
        rows.extend(fn.to_json() for fn in extraction.functions)
    header = artifact_header(
        config_hash=args.config_hash,
        seed=None,
        command="extract",
        files=len(result.files),
        functions=len(rows),
        skipped_files=[s.path for s in result.skipped],
        skipped_parse=parse_skips,
        lex_diagnostics=n_diags,
    )
    write_jsonl(args.out, rows, header)
    validate_jsonl(args.out, "functions")
    print(f"extract: {len(rows)} functions from {len(result.files)} files -> {args.out}")
    if result.skipped:
        print(f"extract: skipped {len(result.skipped)} unreadable files", file=sys.stderr)
    for diag in parse_skips:
        print(f"extract: skipped file: {diag}", file=sys.stderr)
    return 0


def _read_training_records(path: Path) -> list[tuple[str, TDLabel]]:
    records = []
    for row in read_jsonl(path):
        text = row.get("comment", row.get("text"))
        if text is None:
            raise ValueError(f"{path}: rows need a 'comment' or 'text' field")
        label = parse_label(str(row["label"])) if "label" in row else None
        if label is None and "is_satd" in row:
            label = TDLabel.DESIGN if row["is_satd"] else TDLabel.NON_SATD
        if label is None:
            raise ValueError(f"{path}: rows need a 'label' or 'is_satd' field")
        records.append((clean_comment(text), label))
    return records


def cmd_train_detector(args) -> int:
    records = _read_training_records(_require(args.inp))
    config = ClassifierConfig(seed=args.seed, c=args.c, max_iter=args.max_iter)
    model = train_binary(
        [(t, l is not TDLabel.NON_SATD) for t, l in records], config
    )
    model.save(args.out)
    print(f"train-detector: {len(records)} records, vocab {len(model.vocabulary)} -> {args.out}")
    return 0


def cmd_train_types(args) -> int:
    records = _read_training_records(_require(args.inp))
    config = ClassifierConfig(seed=args.seed, c=args.c, max_iter=args.max_iter)
    models = train_type_classifiers(records, config)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for td, model in models.items():
        model.save(outdir / f"{td.value.lower()}.json")
    print(f"train-types: 5 heads on {len(records)} records -> {outdir}")
    return 0


def cmd_predict(args) -> int:
    model_path = _require(args.model)
    functions = _load_functions(args.inp)
    rows = []
    if model_path.is_dir():
        models, detector = _load_model_bundle(model_path)
        for fn in functions:
            for comment in fn.comments:
                p_satd = detector.predict_proba(comment.clean_text) if detector else None
                if not args.keep_all and p_satd is not None and p_satd <= args.threshold:
                    continue
                pred = predict(models, comment.clean_text, binary_model=detector)
                row = pred.to_json()
                row["comment_id"] = comment.id
                row["function_id"] = fn.id
                row["comment"] = comment.clean_text
                if p_satd is not None:
                    row["p_satd"] = p_satd
                rows.append(row)
        kind = "predictions"
    else:
        model = ClassifierModel.load(model_path)
        for fn in functions:
            for comment in fn.comments:
                p = model.predict_proba(comment.clean_text)
                rows.append(
                    {
                        "comment_id": comment.id,
                        "function_id": fn.id,
                        "comment": comment.clean_text,
                        "p": p,
                        "positive": p > args.threshold,
                    }
                )
        kind = None
    header = artifact_header(config_hash=args.config_hash, seed=None, command="predict")
    write_jsonl(args.out, rows, header)
    if kind:
        validate_jsonl(args.out, kind)
    print(f"predict: {len(rows)} comment predictions -> {args.out}")
    return 0


def cmd_sample(args) -> int:
    triplets = [Triplet.from_json(row) for row in read_jsonl(_require(args.triplets))]
    models, detector = _load_model_bundle(_require(args.models))
    q, q_hat = build_candidates(triplets, models, detector)
    result = sample_functions(q, q_hat, args.n, args.seed)
    selected = set(result.selected_functions)
    rows = [{"kind": "selected_function", "function_id": fid} for fid in result.selected_functions]
    q_ids = {t.comment_id for t in q}
    ranked = {r.triplet.comment_id: r for r in q_hat}
    for t in triplets:
        if t.comment_id in q_ids:
            branch, entr, rank = "Q", None, None
        elif t.comment_id in ranked:
            r = ranked[t.comment_id]
            branch, entr, rank = "Q_hat", r.entropy, r.rank
        else:
            branch, entr, rank = "rest", None, None
        rows.append(
            {
                "kind": "candidate",
                "comment_id": t.comment_id,
                "function_id": t.function_id,
                "branch": branch,
                "entropy": entr,
                "rank": rank,
                "selected": t.function_id in selected,
            }
        )
    header = artifact_header(
        config_hash=args.config_hash,
        seed=args.seed,
        command="sample",
        n=args.n,
        q_size=len(q),
        q_hat_size=len(q_hat),
    )
    write_jsonl(args.out, rows, header)
    validate_jsonl(args.out, "sample")
    print(
        f"sample: |Q|={len(q)} |Q_hat|={len(q_hat)} -> "
        f"{len(result.selected_functions)} functions -> {args.out}"
    )
    return 0


def _selected_function_ids(sample_path: Path) -> list[str]:
    return [
        row["function_id"]
        for row in read_jsonl(sample_path)
        if row.get("kind") == "selected_function"
    ]


def cmd_assign(args) -> int:
    functions = _load_functions(args.functions)
    selected = set(_selected_function_ids(_require(args.sample)))
    comment_ids = [
        c.id
        for fn in functions
        if fn.id in selected
        for c in fn.comments
    ]
    if not comment_ids:
        raise ValueError("no comments to assign: selected functions have none")
    annotators = [a.strip() for a in args.annotators.split(",") if a.strip()]
    tasks = assign(comment_ids, annotators, seed=args.seed, phase=args.phase)
    store = TaskStore(args.store)
    store.add_tasks(tasks)
    store.close()
    spread = workload(tasks)
    print(f"assign: {len(tasks)} tasks -> {args.store}; workload {dict(sorted(spread.items()))}")
    return 0


def cmd_auto_label(args) -> int:
    import random as _random

    functions = _load_functions(args.functions)
    clean_by_comment = {c.id: c.clean_text for fn in functions for c in fn.comments}
    store = TaskStore(_require(args.store))
    rng = _random.Random(args.seed)
    n_conflicts = 0
    for task in store.list(state=TaskState.ASSIGNED):
        text = clean_by_comment.get(task.comment_id, "")
        rule = keyword_rule_label(text)
        store.submit(task.task_id, task.annotator_a, rule)
        if rng.random() < args.disagree_rate:
            others = [l for l in list(TD_TYPES) + [TDLabel.NON_SATD] if l is not rule]
            store.submit(task.task_id, task.annotator_b, rng.choice(others))
            n_conflicts += 1
        else:
            store.submit(task.task_id, task.annotator_b, rule)
    for task in store.conflicts():
        text = clean_by_comment.get(task.comment_id, "")
        store.resolve(task.task_id, keyword_rule_label(text), note="rule-based consensus")
    store.close()
    print(f"auto-label: labeled all open tasks ({n_conflicts} conflicts audited) -> {args.store}")
    return 0


def cmd_serve(args) -> int:
    import os

    import uvicorn

    from satdkit.annotation.service import create_app

    functions = _load_functions(args.functions) if args.functions else []
    store = TaskStore(_require(args.store))
    app = create_app(store, functions)
    print(f"annotate-serve: http://{args.host}:{args.port} ({len(store.tasks)} tasks)")
    level = os.environ.get("SATDKIT_LOG_LEVEL", "warning").lower()
    uvicorn.run(app, host=args.host, port=args.port, log_level=level)
    return 0


def cmd_export_finals(args) -> int:
    store = TaskStore(_require(args.store))
    rows = store.finals()
    store.close()
    header = artifact_header(config_hash=args.config_hash, seed=None, command="export-finals")
    write_jsonl(args.out, rows, header)
    validate_jsonl(args.out, "finals")
    print(f"export-finals: {len(rows)} final labels -> {args.out}")
    return 0


def _read_finals(path: Path) -> list[tuple[str, TDLabel]]:
    return [(row["comment_id"], TDLabel(row["final_label"])) for row in read_jsonl(path)]


def cmd_build(args) -> int:
    finals = _read_finals(_require(args.finals))
    functions = _load_functions(args.functions)
    if args.kind == "comment":
        scope = ContextScope.parse(args.scope)
        samples = build_comment_dataset(finals, functions, scope, window=args.window)
        rows = [s.to_json() for s in samples]
        kind = "comment_dataset"
    else:
        samples = build_code_dataset(finals, functions)
        rows = [s.to_json() for s in samples]
        kind = "code_dataset"
    header = artifact_header(
        config_hash=args.config_hash, seed=None, command="build", dataset_kind=args.kind
    )
    write_jsonl(args.out, rows, header)
    validate_jsonl(args.out, kind)
    print(f"build: {len(rows)} {args.kind} records -> {args.out}")
    return 0


def cmd_dedup(args) -> int:
    rows = list(read_jsonl(_require(args.inp)))
    kept = dedup_rows(rows, args.kind)
    header = artifact_header(config_hash=args.config_hash, seed=None, command="dedup")
    write_jsonl(args.out, kept, header)
    print(f"dedup: {len(rows)} -> {len(kept)} records -> {args.out}")
    return 0


def cmd_folds(args) -> int:
    rows = list(read_jsonl(_require(args.inp)))
    split = cross_project_folds(rows, n_folds=args.n_folds, seed=args.seed)
    blob = {
        "_header": artifact_header(config_hash=args.config_hash, seed=args.seed, command="folds")["_header"],
        "n_folds": split.n_folds,
        "folds": split.to_json(),
    }
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    Path(args.out).write_text(json.dumps(blob, indent=2, sort_keys=True), encoding="utf-8")
    validate_json(args.out, "folds")
    print(f"folds: {len(split.project_to_fold)} projects into {split.n_folds} folds -> {args.out}")
    return 0


def cmd_stats(args) -> int:
    from satdkit.dataset.build import CodeSample, CommentSample

    comment_samples = None
    code_samples = None
    functions = None
    overlap = None
    if getattr(args, "predictions", None):
        from satdkit.classify.predict import Prediction, overlap_report

        preds = [
            Prediction(
                probabilities={},
                predicted=[TDLabel(l) for l in row.get("predicted", [])],
                comment_id=row.get("comment_id"),
            )
            for row in read_jsonl(_require(args.predictions))
        ]
        matrix = overlap_report(preds)
        overlap = {
            "labels": [t.value for t in TD_TYPES],
            "matrix": [[float(x) for x in row] for row in matrix],
        }
    if args.comments:
        comment_samples = [
            CommentSample(
                comment_id=r["id"],
                comment=r["comment"],
                context=r.get("context", ""),
                scope=r.get("scope", ""),
                label=TDLabel(r["label"]),
                project=r.get("project", ""),
            )
            for r in read_jsonl(_require(args.comments))
        ]
    if args.code:
        code_samples = [
            CodeSample(
                function_id=r["id"],
                code=r["code"],
                labels=[TDLabel(l) for l in r["labels"]],
                project=r.get("project", ""),
            )
            for r in read_jsonl(_require(args.code))
        ]
    if args.functions:
        functions = _load_functions(args.functions)
    report = stats_report(comment_samples, code_samples, functions, overlap=overlap)
    blob = {
        "_header": artifact_header(config_hash=args.config_hash, seed=None, command="stats")["_header"],
        "report": report,
    }
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    Path(args.out).write_text(json.dumps(blob, indent=2, sort_keys=True), encoding="utf-8")
    validate_json(args.out, "stats")
    print(f"stats: report -> {args.out}")
    if args.csv:
        write_stats_csv(report, args.csv)
        print(f"stats: csv -> {args.csv}")
    if args.figures:
        written = render_figures(report, args.figures)
        print(f"stats: {len(written)} figures -> {args.figures}")
    return 0


def cmd_fuse(args) -> int:
    rows = list(read_jsonl(_require(args.inp)))
    if getattr(args, "scope", None):
        rows = [r for r in rows if r.get("scope") == args.scope]
        if not rows:
            raise ValueError(f"no records with scope {args.scope!r} in {args.inp}")
    out_rows = []
    for row in rows:
        comment_toks = fusion_tokens(row["comment"])
        code_toks = fusion_tokens(row.get("context", ""))
        if args.method == "strconcat":
            out_rows.append(
                {"id": row["id"], "tokens": str_concat(comment_toks, code_toks, args.max_len)}
            )
        else:
            if not comment_toks:
                raise ValueError(f"comment {row['id']} has no tokens")
            h = embed_tokens(row["comment"], dim=args.dim, seed=args.seed)
            if code_toks:
                g = embed_tokens(row["context"], dim=args.dim, seed=args.seed)
                fused = code_att(g, h)
                pooled = fused.pooled
            else:
                pooled = h.values.mean(axis=0)  # no code context to attend from
            out_rows.append({"id": row["id"], "pooled": [float(x) for x in pooled]})
    header = artifact_header(
        config_hash=args.config_hash, seed=args.seed, command="fuse", method=args.method
    )
    write_jsonl(args.out, out_rows, header)
    print(f"fuse: {len(out_rows)} rows ({args.method}) -> {args.out}")
    return 0


def cmd_ensemble(args) -> int:
    inputs: dict[str, Path] = {}
    if getattr(args, "scopes", None):
        pattern = args.pattern
        for scope in args.scopes.split(","):
            scope = scope.strip()
            inputs[scope] = _require(pattern.format(scope=scope))
    elif getattr(args, "inputs", None):
        for item in args.inputs.split(","):
            scope, _, path = item.partition("=")
            if not path:
                raise ValueError(f"--inputs items look like scope=path, got {item!r}")
            inputs[scope.strip()] = _require(path.strip())
    else:
        raise ValueError("ensemble needs --scopes (with --pattern) or --inputs scope=path pairs")
    by_id: dict[str, dict] = {}
    probs_by_id: dict[str, dict] = {}
    for scope, path in inputs.items():
        for row in read_jsonl(path):
            by_id.setdefault(row["id"], {})[scope] = TDLabel(row["label"])
            if "probabilities" in row:
                probs_by_id.setdefault(row["id"], {})[scope] = {
                    TDLabel(k): v for k, v in row["probabilities"].items()
                }
    rows = []
    for rid in sorted(by_id):
        votes = by_id[rid]
        if len(votes) != len(inputs):
            missing = sorted(set(inputs) - set(votes))
            raise ValueError(f"record {rid} missing predictions for scopes {missing}")
        label = majority_vote(votes, probs_by_id.get(rid))
        rows.append({"id": rid, "label": label.value})
    header = artifact_header(
        config_hash=args.config_hash, seed=None, command="ensemble", scopes=sorted(inputs)
    )
    write_jsonl(args.out, rows, header)
    validate_jsonl(args.out, "ensemble")
    print(f"ensemble: {len(rows)} voted labels over {sorted(inputs)} -> {args.out}")
    return 0


def _read_labeled(path: Path, multilabel: bool) -> dict:
    out = {}
    for row in read_jsonl(path):
        rid = row.get("id", row.get("comment_id"))
        if multilabel:
            out[rid] = frozenset(TDLabel(l) for l in row["labels"])
        else:
            label = row.get("label", row.get("final_label"))
            out[rid] = TDLabel(label)
    return out


def cmd_evaluate(args) -> int:
    multilabel = args.task == "code_multilabel"
    gold = _read_labeled(_require(args.gold), multilabel)
    pred = _read_labeled(_require(args.pred), multilabel)
    if set(gold) != set(pred):
        missing = sorted(set(gold) ^ set(pred))[:5]
        raise ValueError(f"gold/pred ids differ (e.g. {missing})")
    ids = sorted(gold)
    g = [gold[i] for i in ids]
    p = [pred[i] for i in ids]
    if args.folds:
        split = FoldSplit.from_json(json.loads(_require(args.folds).read_text())["folds"])
        project_of = {
            row["id"]: row["project"] for row in read_jsonl(_require(args.dataset))
        }
        fold_ids = [split.fold_of(project_of[i]) for i in ids]
        report = evaluate_folds(g, p, fold_ids, args.task).to_json()
    else:
        report = evaluate(g, p, args.task).to_json()
    blob = {
        "_header": artifact_header(config_hash=args.config_hash, seed=None, command="evaluate")["_header"],
        "report": report,
    }
    Path(args.report).parent.mkdir(parents=True, exist_ok=True)
    Path(args.report).write_text(json.dumps(blob, indent=2, sort_keys=True), encoding="utf-8")
    validate_json(args.report, "eval_report")
    headline = report.get("macro_f1") or report.get("mean", {}).get("macro_f1")
    print(f"evaluate: task={args.task} n={len(ids)} macro_f1={headline} -> {args.report}")
    return 0


# --------------------------------------------------------------------------
# pipeline
# --------------------------------------------------------------------------


def _detection_label(probs: dict[TDLabel, float], threshold: float = 0.5) -> TDLabel:
    best = max(TD_TYPES, key=lambda t: probs[t])
    return best if probs[best] > threshold else TDLabel.NON_SATD


def cmd_pipeline(args) -> int:
    cfg = PipelineConfig.from_file(args.config)
    out = cfg.out_dir
    out.mkdir(parents=True, exist_ok=True)
    t0 = time.time()
    chash = cfg.config_hash

    def ns(**kw):
        base = {"config_hash": chash}
        base.update(kw)
        return argparse.Namespace(**base)

    # 1. extract
    extract_path = out / "extract.jsonl"
    cmd_extract(ns(root=cfg.root, out=extract_path, ext=sorted(cfg.extensions)))
    functions = _load_functions(extract_path)

    # 2. train detector + type heads on the synthetic corpus
    synth = synth_comment_corpus(cfg.synth_n, seed=cfg.seed_for("synth"))
    detector = train_binary(
        [(t, l is not TDLabel.NON_SATD) for t, l in synth], cfg.classifier
    )
    models = train_type_classifiers(synth, cfg.classifier)
    models_dir = out / "models"
    models_dir.mkdir(exist_ok=True)
    detector.save(models_dir / "detector.json")
    for td, model in models.items():
        model.save(models_dir / f"{td.value.lower()}.json")
    print(f"pipeline: trained detector + 5 type heads on {len(synth)} synthetic comments")

    # 3. predict
    pred_path = out / "predictions.jsonl"
    cmd_predict(
        ns(model=models_dir, inp=extract_path, out=pred_path, threshold=0.5, keep_all=False)
    )

    # 4. sample
    sample_path = out / "sample.jsonl"
    cmd_sample(
        ns(
            triplets=pred_path,
            models=models_dir,
            n=cfg.sample_n,
            seed=cfg.seed_for("sample"),
            out=sample_path,
        )
    )

    # 5. annotate (rule-labeled dry run) + export finals
    store_path = out / "store.jsonl"
    if store_path.exists():
        store_path.unlink()
    cmd_assign(
        ns(
            functions=extract_path,
            sample=sample_path,
            annotators=",".join(cfg.annotators),
            seed=cfg.seed_for("assign"),
            phase=cfg.phase,
            store=store_path,
        )
    )
    cmd_auto_label(
        ns(
            functions=extract_path,
            store=store_path,
            seed=cfg.seed_for("autolabel"),
            disagree_rate=cfg.disagree_rate,
        )
    )
    finals_path = out / "finals.jsonl"
    cmd_export_finals(ns(store=store_path, out=finals_path))
    finals = _read_finals(finals_path)

    # 6. build datasets (one comment dataset per scope, one code dataset)
    comment_ds_paths: dict[str, Path] = {}
    for scope_text in cfg.scopes:
        ds_path = out / f"dataset_comment_{scope_text}.jsonl"
        cmd_build(
            ns(
                kind="comment",
                finals=finals_path,
                functions=extract_path,
                scope=scope_text,
                window=cfg.window,
                out=ds_path,
            )
        )
        comment_ds_paths[scope_text] = ds_path
    code_ds_path = out / "dataset_code.jsonl"
    cmd_build(
        ns(
            kind="code",
            finals=finals_path,
            functions=extract_path,
            scope=None,
            window=cfg.window,
            out=code_ds_path,
        )
    )
    first_scope = cfg.scopes[0]
    dedup_path = out / f"dataset_comment_{first_scope}.dedup.jsonl"
    cmd_dedup(ns(inp=comment_ds_paths[first_scope], kind="comment", out=dedup_path))

    # 7. folds (clamped when the sampled functions span fewer projects)
    ds_rows = list(read_jsonl(comment_ds_paths[first_scope]))
    n_projects = len({r["project"] for r in ds_rows})
    n_folds = min(cfg.n_folds, n_projects)
    if n_folds < cfg.n_folds:
        print(f"pipeline: clamping folds to {n_folds} (only {n_projects} projects sampled)")
    folds_path = out / "folds.json"
    cmd_folds(
        ns(inp=comment_ds_paths[first_scope], n_folds=n_folds, seed=cfg.seed_for("folds"), out=folds_path)
    )

    # 8. per-scope six-way predictions, ensemble, evaluation
    gold_by_id = {cid: label for cid, label in finals}
    scope_pred_paths: dict[str, Path] = {}
    for scope_text, ds_path in comment_ds_paths.items():
        rows = list(read_jsonl(ds_path))
        # augment with the synthetic corpus so every debt type is present
        train_records = [
            (clean_comment(f"{r['comment']} {r['context']}"), TDLabel(r["label"])) for r in rows
        ] + synth
        scope_models = train_type_classifiers(train_records, cfg.classifier)
        scope_detector = train_binary(
            [(t, l is not TDLabel.NON_SATD) for t, l in train_records], cfg.classifier
        )
        pred_rows = []
        for r in rows:
            text = clean_comment(f"{r['comment']} {r['context']}")
            probs = {td: scope_models[td].predict_proba(text) for td in TD_TYPES}
            label = _detection_label(probs)
            prob_json = {td.value: probs[td] for td in TD_TYPES}
            prob_json[TDLabel.NON_SATD.value] = 1.0 - max(probs.values())
            pred_rows.append(
                {"id": r["id"], "label": label.value, "probabilities": prob_json}
            )
        scope_path = out / f"scope_pred_{scope_text}.jsonl"
        write_jsonl(scope_path, pred_rows, artifact_header(config_hash=chash, command="scope-predict"))
        scope_pred_paths[scope_text] = scope_path
    ensemble_path = out / "ensemble.jsonl"
    cmd_ensemble(
        ns(
            inputs=",".join(f"{s}={p}" for s, p in scope_pred_paths.items()),
            out=ensemble_path,
        )
    )
    gold_path = out / "gold_detection.jsonl"
    write_jsonl(
        gold_path,
        [{"id": cid, "label": label.value} for cid, label in finals],
        artifact_header(config_hash=chash, command="gold"),
    )
    cmd_evaluate(
        ns(
            task="detection",
            gold=gold_path,
            pred=ensemble_path,
            folds=None,
            dataset=None,
            report=out / "eval_detection.json",
        )
    )

    # code-level multilabel evaluation: predicted sets from comment triplets
    pred_sets: dict[str, set[TDLabel]] = {}
    for row in read_jsonl(pred_path):
        s = pred_sets.setdefault(row["function_id"], set())
        s.update(TDLabel(l) for l in row["predicted"])
    code_rows = list(read_jsonl(code_ds_path))
    code_pred_rows = [
        {
            "id": r["id"],
            "labels": [t.value for t in TD_TYPES if t in (pred_sets.get(r["id"], set()) & CODE_TD_LABELS)],
        }
        for r in code_rows
    ]
    code_pred_path = out / "code_pred.jsonl"
    write_jsonl(code_pred_path, code_pred_rows, artifact_header(config_hash=chash, command="code-pred"))
    cmd_evaluate(
        ns(
            task="code_multilabel",
            gold=code_ds_path,
            pred=code_pred_path,
            folds=None,
            dataset=None,
            report=out / "eval_code.json",
        )
    )

    # 9. stats + figures
    cmd_stats(
        ns(
            functions=extract_path,
            comments=comment_ds_paths[first_scope],
            code=code_ds_path,
            out=out / "stats" / "report.json",
            csv=out / "stats" / "stats.csv",
            figures=out / "stats",
        )
    )
    print(f"pipeline: all stages done in {time.time() - t0:.1f}s -> {out}")
    return 0


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satdkit", description="technical-debt mining pipeline"
    )
    parser.add_argument("--version", action="version", version=f"satdkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        p.add_argument("--config", default=None, help="pipeline config (for provenance hash)")
        return p

    p = add("extract", cmd_extract, "scan a corpus and extract function/comment units")
    p.add_argument("--root", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--ext", nargs="*", default=["java"])

    p = add("train-detector", cmd_train_detector, "train the binary SATD detector")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--c", type=float, default=16.0)
    p.add_argument("--max-iter", type=int, default=500)

    p = add("train-types", cmd_train_types, "train the five one-vs-rest type heads")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--c", type=float, default=16.0)
    p.add_argument("--max-iter", type=int, default=500)

    p = add("predict", cmd_predict, "classify extracted comments")
    p.add_argument("--model", required=True, help="model file or models directory")
    p.add_argument("--in", dest="inp", required=True, help="extraction JSONL")
    p.add_argument("--out", required=True)
    p.add_argument("--threshold", type=float, default=0.5)
    p.add_argument("--keep-all", action="store_true", help="keep detector negatives too")

    p = add("sample", cmd_sample, "select informative functions for annotation")
    p.add_argument("--triplets", required=True)
    p.add_argument("--models", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = add("assign", cmd_assign, "create two-annotator tasks for sampled functions")
    p.add_argument("--sample", required=True)
    p.add_argument("--functions", required=True)
    p.add_argument("--annotators", required=True, help="comma-separated ids")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--phase", type=int, default=1)
    p.add_argument("--store", required=True)

    p = add("auto-label", cmd_auto_label, "rule-based labeling for dry runs and fixtures")
    p.add_argument("--store", required=True)
    p.add_argument("--functions", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--disagree-rate", type=float, default=0.0)

    p = add("annotate-serve", cmd_serve, "serve the annotation HTTP API")
    p.add_argument("--store", required=True)
    p.add_argument("--functions", default=None)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)

    p = add("export-finals", cmd_export_finals, "export final labels as JSONL")
    p.add_argument("--store", required=True)
    p.add_argument("--out", required=True)

    p = add("build", cmd_build, "build a dataset from finals + functions")
    p.add_argument("--kind", choices=["comment", "code"], required=True)
    p.add_argument("--finals", required=True)
    p.add_argument("--functions", required=True)
    p.add_argument("--scope", default="2", help="2|10|20|full (comment kind)")
    p.add_argument("--window", choices=["following", "centered"], default="following")
    p.add_argument("--out", required=True)

    p = add("dedup", cmd_dedup, "drop duplicate records")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--kind", choices=["comment", "code"], required=True)
    p.add_argument("--out", required=True)

    p = add("folds", cmd_folds, "assign projects to cross-project folds")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--n-folds", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = add("stats", cmd_stats, "distribution report with figures")
    p.add_argument("--functions", default=None)
    p.add_argument("--comments", default=None)
    p.add_argument("--code", default=None)
    p.add_argument("--predictions", default=None, help="prediction JSONL for the overlap matrix")
    p.add_argument("--out", required=True)
    p.add_argument("--csv", default=None)
    p.add_argument("--figures", default=None)

    p = add("fuse", cmd_fuse, "fuse comment and code context")
    p.add_argument("--in", dest="inp", required=True, help="comment dataset JSONL")
    p.add_argument("--method", choices=["strconcat", "codeatt"], required=True)
    p.add_argument("--scope", default=None, help="only fuse records with this scope label")
    p.add_argument("--max-len", type=int, default=256)
    p.add_argument("--dim", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = add("ensemble", cmd_ensemble, "majority-vote per-scope predictions")
    p.add_argument("--inputs", default=None, help="scope=path,scope=path,...")
    p.add_argument("--scopes", default=None, help="e.g. 2,10,20,full (with --pattern)")
    p.add_argument(
        "--pattern",
        default="scope_pred_{scope}.jsonl",
        help="path template for --scopes, {scope} is substituted",
    )
    p.add_argument("--out", required=True)

    p = add("evaluate", cmd_evaluate, "score predictions against gold labels")
    p.add_argument("--task", choices=["identification", "classification", "detection", "code_multilabel"], required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--pred", required=True)
    p.add_argument("--folds", default=None)
    p.add_argument("--dataset", default=None, help="dataset JSONL giving id->project (with --folds)")
    p.add_argument("--report", required=True)

    p = sub.add_parser("pipeline", help="run every stage on a corpus")
    p.set_defaults(func=cmd_pipeline)
    p.add_argument("--config", required=True)

    return parser


def main(argv=None) -> int:
    import logging
    import os

    logging.basicConfig(level=os.environ.get("SATDKIT_LOG_LEVEL", "WARNING").upper())
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "config_hash"):
        config_hash = ""
        if getattr(args, "config", None):
            config_hash = PipelineConfig.from_file(args.config).config_hash
        args.config_hash = config_hash
    try:
        return args.func(args) or 0
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
