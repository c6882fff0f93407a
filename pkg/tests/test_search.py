import numpy as np
import pytest

from socode.code import LinearCode, griesmer_upper, min_distance, puncture
from socode.embedding import coset_table
from socode.gf2 import BitMatrix
from socode.search import (
    CONFIRMED,
    GAP,
    UNKNOWN,
    SearchBudgetError,
    SearchRecord,
    assess_optimality,
    classify_length,
    conjecture_scan,
    count_subsets,
    puncture_embed_search,
    reconstruct,
    seed_digest,
)
from socode.so_analysis import so_check

from .oracles import brute_min_distance


def _seed(bundled, name, cols):
    g = bundled(name)
    return LinearCode(g.take_columns(range(cols)), name=f"{name}[:{cols}]")


@pytest.mark.parametrize(
    "name, cols, n, d, appended",
    [("so45_5", 42, 45, 22, [15, 25, 29]), ("so53_5", 50, 53, 26, [3, 5, 7]), ("so60_5", 58, 60, 30, [12, 20])],
)
def test_truncated_codes_reembed(bundled, name, cols, n, d, appended):
    recs = puncture_embed_search(_seed(bundled, name, cols), 0, coset_table(5))
    assert len(recs) == 1
    r = recs[0]
    assert (r.n, r.k, r.d) == (n, 5, d)
    assert r.appended == appended and r.punctured == []
    assert r.optimality == CONFIRMED


def test_bundled_tail_matches(bundled):
    g = bundled("so45_5")
    assert g.take_columns([42, 43, 44]).transpose().to_strings() == ["01111", "11001", "11101"]


def test_so_seed_t0_returns_itself(bundled):
    g = bundled("g10_3")
    recs = puncture_embed_search(LinearCode(g), 0, coset_table(3))
    assert [(r.n, r.d, r.appended) for r in recs] == [(10, 4, [])]


def test_search_records_are_sound(bundled):
    seed = LinearCode(bundled("g11_4"), name="g11_4")
    table = coset_table(4)
    recs = puncture_embed_search(seed, 3, table)
    assert recs and len({r.n for r in recs}) == len(recs)
    for r in recs:
        assert r.d % 2 == 0
        assert r.d <= griesmer_upper(r.n, 4)
        g = reconstruct(r, seed.generator, table)
        assert g.cols == r.n and so_check(g)
        assert brute_min_distance(g) == r.d
        assert SearchRecord.from_dict(r.to_dict()) == r
    # the unpunctured seed embeds to [14,4,6]
    assert any((r.n, r.d) == (14, 6) for r in recs)


def test_search_keeps_first_best_in_colex_order(bundled):
    # exhaustive reference: the best distance over all <= 2-subsets, per length
    from itertools import combinations

    from socode.embedding import embed

    seed = bundled("g11_4")
    table = coset_table(4)
    best = {}
    for t in range(3):
        for sub in sorted(combinations(range(1, 12), t), key=lambda s: s[::-1]):
            out, _ = embed(puncture(LinearCode(seed), sub).generator, table, with_distances=False)
            code = LinearCode(out)
            if code.dimension < 4:
                continue
            d = min_distance(code)
            if out.cols not in best or d > best[out.cols][0]:
                best[out.cols] = (d, list(sub))
    recs = puncture_embed_search(LinearCode(seed), 2, table)
    assert {r.n: (r.d, r.punctured) for r in recs} == best


def test_search_is_deterministic(bundled):
    seed = LinearCode(bundled("g11_4"))
    a = [r.to_json() for r in puncture_embed_search(seed, 2, coset_table(4))]
    b = [r.to_json() for r in puncture_embed_search(seed, 2, coset_table(4))]
    assert a == b


def test_budget(bundled):
    seed = LinearCode(bundled("so45_5"))
    assert count_subsets(45, 2) == 1 + 45 + 990
    with pytest.raises(SearchBudgetError):
        puncture_embed_search(seed, 3, coset_table(5), max_subsets=100)
    with pytest.raises(SearchBudgetError):
        puncture_embed_search(seed, 7, coset_table(5))
    with pytest.raises(ValueError):
        puncture_embed_search(LinearCode(bundled("g10_3")), 1, coset_table(4))


def test_reconstruct_rejects_other_seed(bundled):
    seed = LinearCode(bundled("g11_4"))
    rec = puncture_embed_search(seed, 0, coset_table(4))[0]
    with pytest.raises(ValueError):
        reconstruct(rec, bundled("g14_4"), coset_table(4))
    assert rec.seed_sha256 == seed_digest(bundled("g11_4"))


def test_assess_optimality():
    assert assess_optimality(45, 5, 22) == CONFIRMED
    assert assess_optimality(45, 5, 20) == GAP
    assert assess_optimality(10, 3, 4) == CONFIRMED
    assert assess_optimality(45, 5, 20, bounds={(45, 5): 21}) == CONFIRMED
    assert assess_optimality(45, 5, 20, bounds={(45, 5): 22}) == UNKNOWN
    with pytest.raises(ValueError):
        assess_optimality(45, 5, 21)
    with pytest.raises(ValueError):
        assess_optimality(45, 5, 24)


def test_classify_length():
    assert classify_length(5, 45) == (14, 31, "optimal-expected")
    assert classify_length(5, 53) == (22, 31, "optimal-expected")
    assert classify_length(5, 60) == (29, 31, "optimal-expected")
    assert classify_length(5, 21)[2] == "gap-expected"
    assert classify_length(5, 37)[2] == "gap-expected"
    assert classify_length(6, 46)[2] == "excluded-length"
    assert classify_length(6, 70)[2] == "excluded-residue"
    assert classify_length(6, 80)[2] == "optimal-expected"
    with pytest.raises(ValueError):
        classify_length(4, 20)


def test_conjecture_scan(bundled):
    table = coset_table(5)
    recs = []
    for name, cols in (("so45_5", 42), ("so53_5", 50), ("so60_5", 58)):
        recs += puncture_embed_search(_seed(bundled, name, cols), 0, table)
    rows = {r.n: r for r in conjecture_scan(5, range(40, 62), recs)}
    for n in (45, 53, 60):
        assert rows[n].verdict == "supports" and rows[n].d == rows[n].d_upper
    assert rows[52].status == "missing" and rows[52].verdict in ("no-evidence", "n/a")
    assert all(r.verdict != "contradicts" for r in rows.values())
