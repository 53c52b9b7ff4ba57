from hypothesis import given
from hypothesis import strategies as st

from satdkit.classify.cleaning import clean_comment, mat_baseline, tokenize


def test_line_comment_delimiters_removed():
    assert clean_comment("// TODO: fix") == "todo: fix"


def test_block_comment_with_gutter():
    # derived by hand: delimiters out, per-line * gutter stripped, lowercased
    assert clean_comment("/* A *\n * B */") == "a b"


def test_empty_is_identity():
    assert clean_comment("") == ""


def test_javadoc_gutter():
    raw = "/**\n * Computes things.\n * todo finish it\n */"
    assert clean_comment(raw) == "computes things. todo finish it"


def test_whitespace_collapse_and_lowercase():
    assert clean_comment("//   Lots\t of   SPACE  ") == "lots of space"


@given(st.text(max_size=200))
def test_clean_is_idempotent(raw):
    once = clean_comment(raw)
    assert clean_comment(once) == once


def test_mat_positive_task_tag():
    assert mat_baseline("todo - need a lot more tests") is True


def test_mat_negative_plain_comment():
    assert mat_baseline("method too complex") is False


def test_mat_whole_token_boundary():
    assert mat_baseline("xxxl size") is False
    assert mat_baseline("size xxx") is True
    assert mat_baseline("fixme: later") is True
    assert mat_baseline("hackathon results") is False


def test_mat_input_is_stable_under_cleaning():
    for text in ("todo fix this", "a hack around the cache"):
        if mat_baseline(text):
            assert clean_comment(text) == text


def test_tokenize():
    assert tokenize("todo: fix the $cache, NOW") == ["todo", "fix", "the", "$cache", "now"]
