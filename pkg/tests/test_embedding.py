import json
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from socode.code import LinearCode, min_distance
from socode.embedding import (
    CacheError,
    EmbeddingReport,
    TableRangeError,
    build_coset_table,
    cache_path,
    coset_leader,
    coset_table,
    embed,
    embedding_bound,
    minimal_embedding_oracle,
    read_table,
    simplex_columns,
    write_table,
)
from socode.gf2 import BitMatrix
from socode.reed_muller import so_matrix
from socode.so_analysis import syndrome

from .oracles import brute_min_distance, brute_self_orthogonal, random_matrix


@pytest.mark.parametrize("k, rho", [(2, 3), (3, 3), (4, 5), (5, 5)])
def test_small_tables(k, rho):
    t = coset_table(k)
    assert len(t) == 2 ** (k * (k + 1) // 2)
    assert t.covering_radius == rho
    assert embedding_bound(k) >= rho


def test_known_leaders():
    assert coset_leader(coset_table(3), "001001") == [2, 3]
    assert coset_leader(coset_table(4), "0011101011") == [6, 10, 15]
    assert coset_leader(coset_table(4), 0) == []


def test_leader_is_lexicographically_first():
    # brute force over all supports in (weight, lexicographic) order for k = 3
    from itertools import combinations

    t = coset_table(3)
    colsyn = so_matrix(3).column_syndromes()
    seen = {}
    for w in range(8):
        for combo in combinations(range(1, 8), w):
            s = 0
            for i in combo:
                s ^= int(colsyn[i])
            seen.setdefault(s, list(combo))
    assert len(seen) == 64
    for s, lead in seen.items():
        assert t.leader(s) == lead


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_every_leader_reproduces_its_syndrome(k):
    t = coset_table(k)
    colsyn = so_matrix(k).column_syndromes()
    for s in range(len(t)):
        lead = t.leader(s)
        acc = 0
        for i in lead:
            acc ^= int(colsyn[i])
        assert acc == s and len(lead) == t.weights[s]


def test_k6_sampled_consistency():
    t = coset_table(6)
    assert t.covering_radius == 7
    colsyn = so_matrix(6).column_syndromes()
    rng = np.random.default_rng(6)
    idx = rng.integers(0, len(t), 100_000)
    pos = t.position_records()[idx].astype(np.int64)
    assert np.array_equal(np.bitwise_xor.reduce(colsyn[pos], axis=1), idx)
    assert np.array_equal((pos > 0).sum(axis=1), t.weights[idx])


def test_embed_g11_4(bundled):
    out, report = embed(bundled("g11_4"), coset_table(4))
    assert out == bundled("g14_4")
    assert report.syndrome == "0011101011"
    assert report.leader_support == [6, 10, 15]
    assert (report.output_n, report.output_k, report.output_min_distance) == (14, 4, 6)
    assert report.input_min_distance == 5


def test_embed_g8_3(bundled):
    out, report = embed(bundled("g8_3"), coset_table(3))
    assert report.leader_support == [2, 3]
    assert report.appended_columns == ["010", "011"]
    assert brute_self_orthogonal(out)
    assert (out.cols, report.output_min_distance) == (10, 4)


def test_embed_leaves_so_codes_alone(bundled):
    g = bundled("g10_3")
    out, report = embed(g, coset_table(3))
    assert out == g and report.was_already_so and report.leader_support == []


def test_embed_rejects_wrong_k(bundled):
    with pytest.raises(ValueError):
        embed(bundled("g10_3"), coset_table(4))


def test_report_json_roundtrip(bundled):
    _, report = embed(bundled("g11_4"), coset_table(4))
    text = json.dumps(report.to_dict(), sort_keys=True)
    assert EmbeddingReport.from_dict(json.loads(text)) == report


def test_build_is_deterministic():
    a = build_coset_table(4)
    b = build_coset_table(4)
    assert a.same_as(b)


def test_cache_roundtrip(tmp_path):
    t = build_coset_table(4, cache=tmp_path)
    path = cache_path(tmp_path, 4)
    assert path.exists()
    assert path.stat().st_size == 7 + 2**10 * 6
    assert read_table(path, expect_k=4).same_as(t)
    assert build_coset_table(4, cache=tmp_path).same_as(t)


def test_corrupt_cache_is_rebuilt(tmp_path):
    t = build_coset_table(3, cache=tmp_path)
    path = cache_path(tmp_path, 3)
    raw = bytearray(path.read_bytes())
    raw[7 + 5 * 5 + 1] ^= 0x01
    path.write_bytes(bytes(raw))
    with pytest.raises(CacheError):
        read_table(path)
    with pytest.warns(UserWarning, match="rebuilding"):
        again = build_coset_table(3, cache=tmp_path)
    assert again.same_as(t)
    assert read_table(path).same_as(t)


def test_bad_magic_and_wrong_k(tmp_path):
    p = tmp_path / "x.bin"
    p.write_bytes(b"NOPE" + bytes(10))
    with pytest.raises(CacheError):
        read_table(p)
    write_table(coset_table(3), p)
    with pytest.raises(CacheError):
        read_table(p, expect_k=4)


def test_k7_requires_opt_in():
    with pytest.raises(TableRangeError):
        build_coset_table(7)
    with pytest.raises(TableRangeError):
        build_coset_table(1)


def test_oracle_examples(bundled):
    assert minimal_embedding_oracle(bundled("g10_3"), 4) == 0
    assert minimal_embedding_oracle(bundled("g8_3"), 4) == 2
    assert minimal_embedding_oracle(bundled("g11_4"), 5) == 3
    with pytest.raises(ValueError):
        minimal_embedding_oracle(bundled("g11_4"), 2)


def test_simplex_columns():
    assert simplex_columns(3, [6, 1]).to_strings() == ["10", "10", "01"]


@given(st.integers(2, 4), st.integers(1, 16), st.integers(0, 2**32 - 1))
def test_embedding_matches_oracle(k, n, seed):
    g = random_matrix(np.random.default_rng(seed), k, n)
    out, report = embed(g, coset_table(k), with_distances=False)
    assert len(report.leader_support) == minimal_embedding_oracle(g, k + 1)
    assert brute_self_orthogonal(out)
    assert out.take_columns(range(n)) == g
    assert syndrome(out).is_zero()


@given(st.integers(5, 6), st.integers(1, 40), st.integers(0, 2**32 - 1))
def test_embedding_bound_and_even_distance(k, n, seed):
    g = random_matrix(np.random.default_rng(seed), k, n)
    out, report = embed(g, coset_table(k), with_distances=False)
    assert len(report.leader_support) <= embedding_bound(k)
    assert brute_self_orthogonal(out)
    if LinearCode(out).dimension:
        d = min_distance(LinearCode(out))
        assert d % 2 == 0 and d == brute_min_distance(out)
