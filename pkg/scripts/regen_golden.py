#!/usr/bin/env python3
"""Regenerate tests/golden/extract.jsonl from the bundled mini corpus.

Run after any intentional change to the corpus or the extractor:

    python3 scripts/regen_golden.py

SOURCE_DATE_EPOCH is pinned so the artifact header is reproducible and the
golden comparison can be byte-exact.
"""

import os
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent

os.environ["SOURCE_DATE_EPOCH"] = "0"

from satdkit.cli import main  # noqa: E402

rc = main(
    [
        "extract",
        "--root",
        str(ROOT / "mini_corpus"),
        "--out",
        str(ROOT / "tests" / "golden" / "extract.jsonl"),
    ]
)
sys.exit(rc)
