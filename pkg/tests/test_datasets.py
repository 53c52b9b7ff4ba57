import pytest

from satdkit.dataset.build import (
    build_code_dataset,
    build_comment_dataset,
    dedup_code_samples,
    dedup_comment_samples,
    dedup_rows,
)
from satdkit.dataset.context import ContextScope
from satdkit.dataset.maldonado import read_maldonado
from satdkit.extract.functions import extract_file
from satdkit.labels import CODE_TD_LABELS, TDLabel

from conftest import source


CONTENT = (
    "class A {{\n"
    "  void {name}() {{\n"
    "    // c1 of {name}\n"
    "    a();\n"
    "    // c2 of {name}\n"
    "    b();\n"
    "  }}\n"
    "}}\n"
)


def make_functions(names, repo="projA"):
    fns = []
    for name in names:
        content = CONTENT.format(name=name)
        [fn] = extract_file(source(content, path=f"{name}.java", repo=repo)).functions
        fns.append(fn)
    return fns


def all_comments(fns):
    return [c for fn in fns for c in fn.comments]


def test_ten_finals_over_four_functions():
    fns = make_functions(["f", "g", "h", "k"])
    comments = all_comments(fns)
    assert len(comments) == 8
    finals = [(c.id, TDLabel.DESIGN) for c in comments] + [
        (comments[0].id + "", TDLabel.DESIGN)
    ]
    # ten final labels (with a repeat) -> ten records, one per final
    finals = finals[:8] + finals[:2]
    records = build_comment_dataset(finals, fns, ContextScope.lines(2))
    assert len(records) == 10


def test_non_satd_records_are_kept():
    fns = make_functions(["f"])
    c = fns[0].comments[0]
    [record] = build_comment_dataset([(c.id, TDLabel.NON_SATD)], fns, ContextScope.full())
    assert record.label is TDLabel.NON_SATD
    assert record.project == "projA"


def test_dangling_comment_ids_error_lists_them():
    fns = make_functions(["f"])
    with pytest.raises(ValueError) as err:
        build_comment_dataset([("ghost-1", TDLabel.DESIGN), ("ghost-2", TDLabel.TEST)], fns, ContextScope.full())
    assert "ghost-1" in str(err.value) and "ghost-2" in str(err.value)


def test_code_dataset_union_semantics():
    fns = make_functions(["f"])
    c1, c2 = fns[0].comments
    finals = [(c1.id, TDLabel.DESIGN), (c2.id, TDLabel.NON_SATD)]
    [record] = build_code_dataset(finals, fns)
    assert record.labels == [TDLabel.DESIGN]
    assert "//" not in record.code


def test_documentation_only_function_has_empty_labels():
    fns = make_functions(["f"])
    c1, c2 = fns[0].comments
    [record] = build_code_dataset([(c1.id, TDLabel.DOCUMENTATION), (c2.id, TDLabel.DOCUMENTATION)], fns)
    assert record.labels == []


def test_three_type_function():
    content = (
        "class A {\n"
        "  void f() {\n"
        "    // one\n"
        "    a();\n"
        "    // two\n"
        "    b();\n"
        "    // three\n"
        "    c();\n"
        "  }\n"
        "}\n"
    )
    [fn] = extract_file(source(content)).functions
    c1, c2, c3 = fn.comments
    finals = [(c1.id, TDLabel.DESIGN), (c2.id, TDLabel.DEFECT), (c3.id, TDLabel.TEST)]
    [record] = build_code_dataset(finals, [fn])
    assert record.labels == [TDLabel.DESIGN, TDLabel.DEFECT, TDLabel.TEST]


def test_union_rule_matches_brute_force(corpus_functions):
    import itertools
    import random

    rng = random.Random(5)
    comments = all_comments(corpus_functions)
    labels = list(TDLabel)
    finals = [(c.id, rng.choice(labels)) for c in comments]
    records = build_code_dataset(finals, corpus_functions)
    final_map = dict(finals)
    by_fn = {}
    for fn in corpus_functions:
        got = set()
        for c in fn.comments:
            if c.id in final_map:
                got.add(final_map[c.id])
        if fn.comments:
            by_fn[fn.id] = got & CODE_TD_LABELS
    assert {r.function_id: set(r.labels) for r in records} == by_fn


def test_dedup_identical_clean_comments_across_files():
    fns_a = make_functions(["f"], repo="projA")
    fns_b = make_functions(["f"], repo="projB")  # same text, other project
    fns = fns_a + fns_b
    finals = [(c.id, TDLabel.DESIGN) for c in all_comments(fns)]
    records = build_comment_dataset(finals, fns, ContextScope.lines(2))
    assert len(records) == 4
    deduped = dedup_comment_samples(records)
    assert len(deduped) == 2  # c1/c2 texts collapse across projects
    assert dedup_comment_samples(deduped) == deduped  # idempotent


def test_dedup_code_by_normalized_text():
    fns = make_functions(["f"], repo="projA") + make_functions(["f"], repo="projB")
    finals = [(fn.comments[0].id, TDLabel.DESIGN) for fn in fns]
    records = build_code_dataset(finals, fns)
    assert len(records) == 2
    assert len(dedup_code_samples(records)) == 1


def test_dedup_rows_cli_shape():
    rows = [
        {"id": "1", "comment": "todo  fix"},
        {"id": "2", "comment": "todo fix"},
        {"id": "3", "comment": "other"},
    ]
    kept = dedup_rows(rows, "comment")
    assert [r["id"] for r in kept] == ["1", "3"]
    assert dedup_rows(kept, "comment") == kept


def test_maldonado_reader(tmp_path):
    csv_path = tmp_path / "m.csv"
    csv_path.write_text(
        "projectname,classification,commenttext\n"
        "apache-ant,DESIGN,\"// TODO ugly hack\"\n"
        "apache-ant,WITHOUT_CLASSIFICATION,\"// plain\"\n"
        "jmeter,REQUIREMENT,\"// todo later\"\n",
        encoding="utf-8",
    )
    rows = read_maldonado(csv_path)
    assert [r["label"] for r in rows] == [TDLabel.DESIGN, TDLabel.NON_SATD, TDLabel.IMPLEMENTATION]
    assert rows[0]["project"] == "apache-ant"
