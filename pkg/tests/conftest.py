import pytest

from satdkit.extract.corpus import SourceFile, scan_corpus
from satdkit.extract.functions import extract_file

import pathlib

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent
MINI_CORPUS = REPO_ROOT / "mini_corpus"
GOLDEN_DIR = pathlib.Path(__file__).resolve().parent / "golden"


def source(content: str, path: str = "Test.java", repo: str = "demo") -> SourceFile:
    return SourceFile(repo_id=repo, path=path, content=content)


@pytest.fixture(scope="session")
def corpus_files():
    return scan_corpus(MINI_CORPUS).files


@pytest.fixture(scope="session")
def corpus_functions(corpus_files):
    functions = []
    for sf in corpus_files:
        extraction = extract_file(sf)
        assert not extraction.skipped, f"{sf.path} skipped: {extraction.diagnostics}"
        functions.extend(extraction.functions)
    return functions
