"""Distribution summaries of extraction output and built datasets.

The CLI renders these as bar charts / histograms next to the JSON and CSV
output, mirroring the usual dataset-paper figures (label distribution,
comments per function, debt types per function).
"""

from __future__ import annotations

import csv
from collections import Counter
from pathlib import Path

from satdkit.dataset.build import CodeSample, CommentSample
from satdkit.extract.functions import FunctionUnit
from satdkit.labels import ALL_LABELS, TD_TYPES, TDLabel


def stats_report(
    comment_samples: list[CommentSample] | None = None,
    code_samples: list[CodeSample] | None = None,
    functions: list[FunctionUnit] | None = None,
    overlap: dict | None = None,
) -> dict:
    if not (comment_samples or code_samples or functions or overlap):
        raise ValueError("nothing to report on")
    report: dict = {}
    if overlap:
        report["overlap"] = overlap

    if comment_samples:
        counts = Counter(s.label for s in comment_samples)
        n = len(comment_samples)
        satd = sum(1 for s in comment_samples if s.label is not TDLabel.NON_SATD)
        report["comments"] = {
            "n_samples": n,
            "label_counts": {l.value: counts.get(l, 0) for l in ALL_LABELS},
            "label_ratios": {l.value: counts.get(l, 0) / n for l in ALL_LABELS},
            "satd_ratio": satd / n,
        }

    if code_samples:
        label_counts = Counter()
        per_function = Counter()
        for s in code_samples:
            per_function[len(s.labels)] += 1
            for l in s.labels:
                label_counts[l] += 1
        report["code"] = {
            "n_samples": len(code_samples),
            "label_counts": {l.value: label_counts.get(l, 0) for l in TD_TYPES[:4]},
            "types_per_function": {
                str(k): per_function[k] for k in sorted(per_function)
            },
        }

    if functions:
        hist = Counter(len(fn.comments) for fn in functions)
        report["functions"] = {
            "n_functions": len(functions),
            "n_comments": sum(len(fn.comments) for fn in functions),
            "comments_per_function": {str(k): hist[k] for k in sorted(hist)},
        }
    return report


def write_stats_csv(report: dict, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["section", "key", "value"])
        for section, body in report.items():
            if section == "overlap":
                labels = body["labels"]
                for i, row in enumerate(body["matrix"]):
                    for j, cell in enumerate(row):
                        writer.writerow([section, f"{labels[i]}/{labels[j]}", cell])
                continue
            for key, value in body.items():
                if isinstance(value, dict):
                    for k2, v2 in value.items():
                        writer.writerow([section, f"{key}.{k2}", v2])
                else:
                    writer.writerow([section, key, value])


def render_figures(report: dict, outdir: str | Path) -> list[Path]:
    """Render the report's distributions as PNG figures; returns the paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def bar(data: dict, title: str, xlabel: str, fname: str, rotate: bool = False):
        fig, ax = plt.subplots(figsize=(7, 4))
        keys = list(data)
        ax.bar(range(len(keys)), [data[k] for k in keys], color="#4878a8")
        ax.set_xticks(range(len(keys)))
        ax.set_xticklabels(keys, rotation=30 if rotate else 0, ha="right" if rotate else "center")
        ax.set_title(title)
        ax.set_xlabel(xlabel)
        ax.set_ylabel("count")
        fig.tight_layout()
        path = outdir / fname
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    if "comments" in report:
        bar(
            report["comments"]["label_counts"],
            "Comment label distribution",
            "label",
            "label_distribution.png",
            rotate=True,
        )
    if "code" in report:
        bar(
            report["code"]["types_per_function"],
            "Debt types per function",
            "number of debt types",
            "types_per_function.png",
        )
        bar(
            report["code"]["label_counts"],
            "Code debt label counts",
            "label",
            "code_label_counts.png",
            rotate=True,
        )
    if "functions" in report:
        bar(
            report["functions"]["comments_per_function"],
            "Comments per function",
            "comments in function",
            "comments_per_function.png",
        )
    if "overlap" in report:
        labels = report["overlap"]["labels"]
        matrix = report["overlap"]["matrix"]
        fig, ax = plt.subplots(figsize=(6, 5))
        image = ax.imshow(matrix, cmap="Blues", vmin=0.0, vmax=1.0)
        ax.set_xticks(range(len(labels)))
        ax.set_yticks(range(len(labels)))
        ax.set_xticklabels(labels, rotation=30, ha="right")
        ax.set_yticklabels(labels)
        for i in range(len(labels)):
            for j in range(len(labels)):
                ax.text(j, i, f"{matrix[i][j]:.2f}", ha="center", va="center", fontsize=8)
        ax.set_title("Co-prediction overlap between debt types")
        fig.colorbar(image, ax=ax, shrink=0.85)
        fig.tight_layout()
        path = outdir / "overlap_matrix.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written
