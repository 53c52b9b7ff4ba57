import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satdkit.fusion.embed import embed_tokens, fusion_tokens
from satdkit.fusion.fuse import SEPARATOR, code_att, str_concat


def test_tokenization_splits_on_whitespace_and_punct():
    assert fusion_tokens("foo.bar(x, y); // z") == ["foo", "bar", "x", "y", "z"]


def test_same_text_same_matrix():
    a = embed_tokens("todo fix the cache", dim=16, seed=1)
    b = embed_tokens("todo fix the cache", dim=16, seed=1)
    assert np.array_equal(a.values, b.values)


def test_repeated_token_repeats_row():
    m = embed_tokens("a b a", dim=8, seed=0)
    assert np.array_equal(m.values[0], m.values[2])
    assert not np.array_equal(m.values[0], m.values[1])


def test_rows_are_unit_norm():
    m = embed_tokens("alpha beta gamma delta", dim=32, seed=7)
    norms = np.linalg.norm(m.values, axis=1)
    assert np.allclose(norms, 1.0, atol=1e-9)


def test_different_seed_changes_vectors():
    a = embed_tokens("alpha", dim=16, seed=0)
    b = embed_tokens("alpha", dim=16, seed=1)
    assert not np.array_equal(a.values, b.values)


def test_empty_text_rejected():
    with pytest.raises(ValueError):
        embed_tokens("", dim=8)
    with pytest.raises(ValueError):
        embed_tokens("...!!!", dim=8)


# ---------------------------------------------------------------------------
# str_concat
# ---------------------------------------------------------------------------


def test_truncation_from_code_tail():
    comment = [f"c{i}" for i in range(5)]
    code = [f"k{i}" for i in range(10)]
    out = str_concat(comment, code, max_len=12)
    assert out == comment + [SEPARATOR] + code[:6]
    assert len(out) == 12


def test_empty_code_gives_comment_plus_separator():
    out = str_concat(["a", "b"], [], max_len=10)
    assert out == ["a", "b", SEPARATOR]


def test_lossless_when_everything_fits():
    out = str_concat(["a"], ["x", "y"], max_len=16)
    assert out == ["a", SEPARATOR, "x", "y"]


def test_comment_truncated_only_when_alone_too_long():
    out = str_concat([f"c{i}" for i in range(20)], ["x"], max_len=8)
    assert out == [f"c{i}" for i in range(8)]


@settings(max_examples=200)
@given(
    st.lists(st.text(alphabet="ab", min_size=1, max_size=3), max_size=30),
    st.lists(st.text(alphabet="xy", min_size=1, max_size=3), max_size=30),
    st.integers(min_value=1, max_value=40),
)
def test_concat_length_bound_and_comment_preservation(comment, code, max_len):
    out = str_concat(comment, code, max_len)
    assert len(out) <= max_len
    if len(comment) < max_len:
        assert out[: len(comment)] == comment  # comment survives when it fits


# ---------------------------------------------------------------------------
# code_att
# ---------------------------------------------------------------------------


def test_single_comment_token_identity():
    g = np.random.default_rng(0).standard_normal((4, 8))
    h = np.random.default_rng(1).standard_normal((1, 8))
    fused = code_att(g, h)
    assert fused.attention.shape == (4, 1)
    assert np.allclose(fused.attention, 1.0)
    for row in fused.fused:
        assert np.allclose(row, h[0], atol=1e-12)
    assert np.allclose(fused.pooled, h[0], atol=1e-12)


def test_duplicate_comment_rows_change_nothing():
    g = np.random.default_rng(2).standard_normal((3, 6))
    h1 = np.random.default_rng(3).standard_normal((1, 6))
    h2 = np.vstack([h1, h1])  # same row twice
    a = code_att(g, h1)
    b = code_att(g, h2)
    # each attention row splits 0.5/0.5 over identical rows -> same fusion
    assert np.allclose(b.attention, 0.5, atol=1e-12)
    assert np.allclose(a.fused, b.fused, atol=1e-12)


def test_hand_computed_two_token_fixture():
    # G = H = I2; scores = I2; softmax row = [e/(1+e), 1/(1+e)]
    g = np.eye(2)
    h = np.eye(2)
    fused = code_att(g, h)
    s = 1.0 / (1.0 + math.exp(-1.0))  # 0.7310585786300049
    expected_a = np.array([[s, 1 - s], [1 - s, s]])
    assert np.allclose(fused.attention, expected_a, atol=1e-9)
    assert np.allclose(fused.fused, expected_a, atol=1e-9)  # A @ I = A
    assert np.allclose(fused.pooled, [0.5, 0.5], atol=1e-9)


def test_rows_are_stochastic_on_random_shapes():
    rng = np.random.default_rng(42)
    for _ in range(25):
        m, n, d = rng.integers(1, 12, size=3)
        fused = code_att(rng.standard_normal((m, d)), rng.standard_normal((n, d)))
        assert fused.attention.shape == (m, n)
        assert fused.fused.shape == (m, d)
        assert fused.pooled.shape == (d,)
        assert np.allclose(fused.attention.sum(axis=1), 1.0, atol=1e-9)
        assert np.all(fused.attention >= 0)


def test_fused_rows_are_convex_combinations():
    rng = np.random.default_rng(5)
    g = rng.standard_normal((3, 4))
    h = rng.standard_normal((2, 4))
    fused = code_att(g, h)
    for i in range(3):
        coeffs = fused.attention[i]
        reconstructed = coeffs[0] * h[0] + coeffs[1] * h[1]
        assert np.allclose(fused.fused[i], reconstructed, atol=1e-12)


def test_code_row_permutation_equivariance():
    rng = np.random.default_rng(6)
    g = rng.standard_normal((5, 4))
    h = rng.standard_normal((3, 4))
    perm = [3, 0, 4, 1, 2]
    a = code_att(g, h)
    b = code_att(g[perm], h)
    assert np.allclose(b.fused, a.fused[perm], atol=1e-12)
    assert np.allclose(b.pooled, a.pooled, atol=1e-12)  # mean is permutation-invariant


def test_dim_mismatch_rejected():
    with pytest.raises(ValueError, match="dims differ"):
        code_att(np.zeros((2, 3)), np.zeros((2, 4)))


def test_accepts_embedding_matrices():
    g = embed_tokens("return cache value", dim=16, seed=0)
    h = embed_tokens("todo fix cache", dim=16, seed=0)
    fused = code_att(g, h)
    assert fused.fused.shape == (3, 16)
    assert np.allclose(fused.attention.sum(axis=1), 1.0, atol=1e-9)
