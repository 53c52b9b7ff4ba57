#!/usr/bin/env python3
"""Launch the annotation service on a fixture store for UI contract tests.

Extracts the bundled mini corpus, assigns every comment to the annotator
pair (alice, bob), and serves the API on the given port with a throwaway
store file.
"""

import argparse
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(REPO_ROOT / "src"))

import uvicorn  # noqa: E402

from satdkit.annotation.service import create_app  # noqa: E402
from satdkit.annotation.store import TaskStore  # noqa: E402
from satdkit.annotation.tasks import assign  # noqa: E402
from satdkit.extract.corpus import scan_corpus  # noqa: E402
from satdkit.extract.functions import extract_file  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--port", type=int, default=8977)
    parser.add_argument("--host", default="127.0.0.1")
    args = parser.parse_args()

    functions = []
    for sf in scan_corpus(REPO_ROOT / "mini_corpus").files:
        functions.extend(extract_file(sf).functions)
    comment_ids = [c.id for fn in functions for c in fn.comments]

    store_dir = tempfile.mkdtemp(prefix="satdkit-ui-fixture-")
    store = TaskStore(Path(store_dir) / "store.jsonl")
    store.add_tasks(assign(comment_ids, ["alice", "bob"], seed=1))

    app = create_app(store, functions)
    print(f"fixture service: {len(store.tasks)} tasks on {args.host}:{args.port}", flush=True)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


if __name__ == "__main__":
    sys.exit(main())
