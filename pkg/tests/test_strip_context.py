from satdkit.dataset.context import ContextScope, extract_context
from satdkit.dataset.strip import strip_comments, stripped_lines
from satdkit.extract.corpus import SourceFile
from satdkit.extract.functions import FunctionUnit, extract_file
from satdkit.extract.lexer import lex_java

from conftest import source


def function_of(content, name=None):
    fns = extract_file(source(content)).functions
    if name is None:
        [fn] = fns
        return fn
    return next(f for f in fns if f.name == name)


def relex_comment_count(text):
    virtual = SourceFile(repo_id="x", path="x", content=text)
    return len(lex_java(virtual).comments())


def code_tokens_normalized(text):
    virtual = SourceFile(repo_id="x", path="x", content=text)
    lexed = lex_java(virtual)
    pieces = [t.text(text) for t in lexed.tokens if t.kind.value in ("code",)]
    return " ".join("".join(pieces).split())


def test_strip_removes_all_comments_keeps_code():
    content = (
        "class A {\n"
        "  void f() {\n"
        "    // one\n"
        "    go(); /* two */\n"
        "    stop(); // three\n"
        "  }\n"
        "}\n"
    )
    fn = function_of(content)
    stripped = strip_comments(fn)
    assert relex_comment_count(stripped) == 0
    assert code_tokens_normalized(stripped) == code_tokens_normalized(fn.body_text)
    assert "// one" not in stripped and "go();" in stripped and "stop();" in stripped


def test_string_literal_with_comment_marker_is_kept():
    content = 'class A {\n  void f() {\n    String s = "// keep";\n  }\n}\n'
    fn = function_of(content)
    assert '"// keep"' in strip_comments(fn)


def test_comment_free_function_is_untouched():
    content = "class A {\n  void f() {\n    int x = 1;\n\n    int y = 2;\n  }\n}\n"
    fn = function_of(content)
    assert strip_comments(fn) == fn.body_text


def test_strip_is_idempotent_and_drops_emptied_lines():
    content = "class A {\n  void f() {\n    // whole line comment\n    go();\n  }\n}\n"
    fn = function_of(content)
    once = strip_comments(fn)
    assert "whole line" not in once
    assert len(once.split("\n")) == len(fn.body_text.split("\n")) - 1
    refn = FunctionUnit(
        id="x", repo_id="x", path="x", name="f", signature="",
        start_line=1, end_line=len(once.split("\n")), body_text=once,
    )
    assert strip_comments(refn) == once


def test_strip_on_whole_mini_corpus(corpus_functions):
    for fn in corpus_functions:
        stripped = strip_comments(fn)
        assert relex_comment_count(stripped) == 0, fn.name
        assert code_tokens_normalized(stripped) == code_tokens_normalized(fn.body_text), fn.name


# ---------------------------------------------------------------------------
# context windows
# ---------------------------------------------------------------------------

FIG_STYLE = (
    "class A {\n"  # 1
    "  void f() {\n"  # 2
    "    // the next two statements need attention\n"  # 3
    "    first();\n"  # 4
    "    second();\n"  # 5
    "    third();\n"  # 6
    "  }\n"  # 7
    "}\n"
)


def test_two_following_lines():
    fn = function_of(FIG_STYLE)
    [comment] = fn.comments
    ctx = extract_context(comment, fn, ContextScope.lines(2))
    assert ctx == "    first();\n    second();"


def test_window_clips_to_function_span():
    fn = function_of(FIG_STYLE)
    [comment] = fn.comments
    ctx = extract_context(comment, fn, ContextScope.lines(10))
    assert ctx.endswith("  }")
    assert "third();" in ctx


def test_comment_at_function_end_yields_empty_context():
    content = "class A {\n  void f() {\n    go();\n    /* tail note */ }\n}\n"
    fn = function_of(content)
    [comment] = fn.comments
    assert comment.end_line == fn.end_line
    assert extract_context(comment, fn, ContextScope.lines(10)) == ""


def test_full_function_equals_strip(corpus_functions):
    for fn in corpus_functions:
        for comment in fn.comments:
            assert extract_context(comment, fn, ContextScope.full()) == strip_comments(fn)


def test_line_context_is_substring_of_full(corpus_functions):
    for fn in corpus_functions:
        full = strip_comments(fn)
        for comment in fn.comments:
            if comment.end_line >= fn.end_line:
                continue
            for k in (2, 10, 20):
                ctx = extract_context(comment, fn, ContextScope.lines(k))
                assert ctx in full, (fn.name, comment.id, k)


def test_other_comments_are_stripped_from_window():
    content = (
        "class A {\n"
        "  void f() {\n"
        "    // target\n"
        "    a();\n"
        "    // other comment\n"
        "    b();\n"
        "  }\n"
        "}\n"
    )
    fn = function_of(content)
    target = fn.comments[0]
    ctx = extract_context(target, fn, ContextScope.lines(3))
    assert "other comment" not in ctx
    assert ctx == "    a();\n    b();"


def test_centered_window_mode():
    fn = function_of(FIG_STYLE)
    [comment] = fn.comments
    ctx = extract_context(comment, fn, ContextScope.lines(2), window="centered")
    # one line before (the header, whose text starts at the match) and one after
    assert ctx == "void f() {\n    first();"


def test_scope_parse_and_labels():
    assert ContextScope.parse("2").k == 2
    assert ContextScope.parse("full").kind == "full"
    assert ContextScope.lines(20).label == "20"
    assert str(ContextScope.full()) == "full"


def test_stripped_lines_keep_file_numbers(corpus_functions):
    for fn in corpus_functions:
        lines = stripped_lines(fn)
        numbers = [n for n, _ in lines]
        assert numbers == sorted(numbers)
        if numbers:
            assert numbers[0] >= fn.start_line and numbers[-1] <= fn.end_line
