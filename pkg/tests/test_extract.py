import pytest

from satdkit.extract.functions import ExtractionError, extract_file, extract_functions
from satdkit.extract.lexer import TokenKind, lex_java, masked_code

from conftest import source


def fn_map(content, **kw):
    extraction = extract_file(source(content, **kw))
    assert not extraction.skipped, extraction.diagnostics
    return {f.name: f for f in extraction.functions}


def test_single_method():
    fns = fn_map("class A {\n  void f() {\n    int x = 1;\n  }\n}\n")
    assert list(fns) == ["f"]
    assert fns["f"].signature == "void f()"
    assert (fns["f"].start_line, fns["f"].end_line) == (2, 4)


def test_string_literal_brace_does_not_widen_span():
    content = (
        "class A {\n"
        "  boolean g(String s) {\n"
        '    if (s.equals("}")) {\n'
        "      return true;\n"
        "    }\n"
        "    return false;\n"
        "  }\n"
        "}\n"
    )
    fns = fn_map(content)
    assert fns["g"].end_line == 7  # hand-counted masked braces
    # masked-brace balance within the span
    sf = source(content)
    lexed = lex_java(sf)
    masked = masked_code(content, lexed.tokens)
    span = masked[fns["g"].start_offset : fns["g"].end_offset + 1]
    assert span.count("{") == span.count("}")


def test_constructor_is_extracted():
    fns = fn_map("class Pool {\n  Pool(int size) {\n    this.size = size;\n  }\n}\n")
    assert list(fns) == ["Pool"]
    assert fns["Pool"].signature == "Pool(int size)"


def test_initializer_blocks_are_not_functions():
    content = "class A {\n  static {\n    X.init();\n  }\n  {\n    y = 1;\n  }\n  void f() {}\n}\n"
    assert list(fn_map(content)) == ["f"]


def test_anonymous_class_method_stays_inside_enclosing_method():
    content = (
        "class A {\n"
        "  Runnable r() {\n"
        "    return new Runnable() {\n"
        "      public void run() {\n"
        "        work();\n"
        "      }\n"
        "    };\n"
        "  }\n"
        "  void after() {}\n"
        "}\n"
    )
    fns = fn_map(content)
    assert sorted(fns) == ["after", "r"]
    assert fns["r"].end_line == 8
    assert "run()" in fns["r"].body_text


def test_control_flow_keywords_are_not_methods():
    content = (
        "class A {\n"
        "  int f(int n) {\n"
        "    while (n > 0) {\n"
        "      n--;\n"
        "    }\n"
        "    for (int i = 0; i < n; i++) {\n"
        "      n += i;\n"
        "    }\n"
        "    switch (n) {\n"
        "      default:\n"
        "        break;\n"
        "    }\n"
        "    try {\n"
        "      g();\n"
        "    } catch (Exception e) {\n"
        "      h();\n"
        "    }\n"
        "    if (n > 2) {\n"
        "      n = 2;\n"
        "    } else {\n"
        "      n = 1;\n"
        "    }\n"
        "    return n;\n"
        "  }\n"
        "}\n"
    )
    assert list(fn_map(content)) == ["f"]


def test_unbalanced_braces_skip_the_file():
    sf = source("class A {\n  void f() {\n}\n")  # missing one close
    with pytest.raises(ExtractionError):
        extract_functions(sf)
    extraction = extract_file(sf)
    assert extraction.skipped and extraction.functions == []
    assert "unbalanced" in extraction.diagnostics[0]


def test_generics_varargs_throws():
    content = (
        "class A {\n"
        "  public <T> Map<String, List<T>> collect(Callable<T>... tasks) throws IOException {\n"
        "    return new HashMap<>();\n"
        "  }\n"
        "}\n"
    )
    fns = fn_map(content)
    assert list(fns) == ["collect"]


# ---------------------------------------------------------------------------
# comment attachment and grouping
# ---------------------------------------------------------------------------


def test_leading_comment_attaches():
    content = "class A {\n  // lead\n  void f() {\n  }\n}\n"
    fns = fn_map(content)
    [c] = fns["f"].comments
    assert (c.position, c.raw_text) == ("leading", "// lead")


def test_leading_attaches_across_annotations():
    content = "class A {\n  /** doc */\n  @Override\n  @Deprecated\n  void f() {\n  }\n}\n"
    fns = fn_map(content)
    [c] = fns["f"].comments
    assert c.position == "leading"
    assert c.kind == "block"


def test_consecutive_line_comments_merge():
    content = "class A {\n  void f() {\n    // one\n    // two\n    // three\n    go();\n  }\n}\n"
    fns = fn_map(content)
    [c] = fns["f"].comments
    assert c.raw_text == "// one\n// two\n// three"
    assert (c.start_line, c.end_line, c.kind, c.position) == (3, 5, "line", "inner")


def test_code_line_breaks_the_run():
    content = "class A {\n  void f() {\n    // one\n    go();\n    // two\n  }\n}\n"
    fns = fn_map(content)
    assert [c.raw_text for c in fns["f"].comments] == ["// one", "// two"]


def test_blank_line_breaks_the_run():
    content = "class A {\n  void f() {\n    // one\n\n    // two\n    go();\n  }\n}\n"
    fns = fn_map(content)
    assert [c.raw_text for c in fns["f"].comments] == ["// one", "// two"]


def test_leading_javadoc_with_empty_body():
    content = "class A {\n  /** doc of f */\n  void f() {\n  }\n}\n"
    fns = fn_map(content)
    assert [(c.position, c.kind) for c in fns["f"].comments] == [("leading", "block")]
    assert all(c.position != "inner" for c in fns["f"].comments)


def test_class_level_comments_are_discarded():
    content = "/** class doc */\nclass A {\n  // stray, not adjacent to a method\n\n  int x;\n\n  void f() {\n  }\n}\n"
    fns = fn_map(content)
    assert fns["f"].comments == []


def test_comment_after_method_close_is_not_attached():
    content = "class A {\n  void f() {\n  }\n  // orphan between methods\n\n  int y;\n}\n"
    fns = fn_map(content)
    assert fns["f"].comments == []


def test_same_line_comment_before_header_is_not_leading():
    content = "class A {\n  /* same line */ void f() {\n  }\n}\n"
    fns = fn_map(content)
    assert fns["f"].comments == []


# ---------------------------------------------------------------------------
# invariants on the mini corpus
# ---------------------------------------------------------------------------

EXPECTED = {
    "aurora/AudioRouter.java": {"registerVoiceRoute": 2},
    "aurora/CallMixer.java": {"mix": 0, "clamp": 0},
    "aurora/SessionCache.java": {"SessionCache": 1, "matchesToken": 1},
    "beacon/HealthProbe.java": {"HealthProbe": 0, "ping": 2, "shutdown": 1},
    "beacon/RetryPolicy.java": {"nextDelay": 1},
    "cascade/PipelineStage.java": {"PipelineStage": 0, "wire": 1},
    "cascade/StreamMerger.java": {"StreamMerger": 0, "mergeLater": 2, "merge": 0},
    "cascade/Throttle.java": {"Throttle": 0, "submitAll": 1, "permits": 1},
    "driftwood/LegacyParser.java": {"countBraces": 1},
    "driftwood/TextBlockReport.java": {"template": 1},
    "ember/ConfigLoader.java": {"load": 1, "reload": 1},
    "ember/MetricsBuffer.java": {"empty": 0, "flush": 1},
    "foxtrot/LedgerWriter.java": {"LedgerWriter": 1, "append": 1},
    "foxtrot/PaymentGateway.java": {"validate": 1},
    "granite/IndexRegistry.java": {"rebuild": 1, "compact": 1},
    "granite/QueryPlanner.java": {"plan": 2, "estimate": 1, "cheapest": 0},
    "granite/StatsView.java": {"render": 0},
    "harbor/BerthMap.java": {"occupancy": 1, "clear": 1},
    "harbor/DockScheduler.java": {"DockScheduler": 0, "schedule": 2, "manifest": 1},
    "harbor/TideTable.java": {"TideTable": 0, "at": 0, "interpolate": 1},
    "ivy/LeaseTable.java": {"Lease": 0, "expired": 1, "grant": 0},
    "ivy/TokenBucket.java": {"tryAcquire": 1, "refill": 1},
    "juniper/SnapshotDiff.java": {"diff": 0},
    "juniper/WalCompactor.java": {"WalCompactor": 0, "compact": 1, "merge": 0},
}


def test_mini_corpus_function_and_comment_counts(corpus_files):
    seen = {}
    for sf in corpus_files:
        extraction = extract_file(sf)
        seen[sf.path] = {f.name: len(f.comments) for f in extraction.functions}
    assert seen == EXPECTED


def test_fig2_style_file_groups_to_two_comments(corpus_files):
    # one leading comment + three consecutive inner lines merged into one
    sf = next(f for f in corpus_files if f.path == "aurora/AudioRouter.java")
    [fn] = extract_file(sf).functions
    assert len(fn.comments) == 2
    leading, inner = fn.comments
    assert leading.position == "leading"
    assert inner.position == "inner"
    assert inner.raw_text.count("\n") == 2  # three lines joined


def test_every_comment_belongs_to_its_function(corpus_functions):
    for fn in corpus_functions:
        for c in fn.comments:
            assert c.function_id == fn.id
            if c.position == "inner":
                assert fn.start_line <= c.start_line and c.end_line <= fn.end_line
            else:
                assert c.end_line < fn.start_line
        lines = [c.start_line for c in fn.comments]
        assert lines == sorted(lines)


def test_grouping_is_maximal(corpus_functions):
    for fn in corpus_functions:
        line_units = [c for c in fn.comments if c.kind == "line" and c.position == "inner"]
        for a, b in zip(line_units, line_units[1:]):
            assert b.start_line > a.end_line + 1 or _code_between(fn, a, b)


def _code_between(fn, a, b):
    body_lines = fn.body_text.split("\n")
    rel = lambda line: line - fn.start_line
    between = body_lines[rel(a.end_line) + 1 : rel(b.start_line)]
    return any(l.strip() for l in between)


def test_masked_brace_balance_on_every_unit(corpus_files):
    for sf in corpus_files:
        lexed = lex_java(sf)
        masked = masked_code(sf.content, lexed.tokens)
        for fn in extract_file(sf).functions:
            span = masked[fn.start_offset : fn.end_offset + 1]
            assert span.count("{") == span.count("}"), (sf.path, fn.name)


def test_extraction_is_deterministic(corpus_files):
    import json

    def run():
        rows = []
        for sf in corpus_files:
            rows.extend(json.dumps(f.to_json(), sort_keys=True) for f in extract_file(sf).functions)
        return "\n".join(rows)

    assert run() == run()
