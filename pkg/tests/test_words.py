import pytest

from spolink.padic import digits
from spolink.words import (
    BASE,
    FIRST,
    GE,
    GT,
    LE,
    LT,
    SECOND,
    build_words,
    ell,
    kind,
    prune,
    pruned_words,
    s_set,
)

PRIMES = (3, 5, 7)


def test_build_words_first_generations():
    got = build_words(1, 4)
    assert [w for w, _ in got] == [LT + LE * 4, GE + LT + LE * 3]
    assert [g for _, g in got] == [-1, 0]
    assert build_words(0, 0) == [(LT, -1)]
    assert build_words(1, 0) == [(LT, -1)]  # no room for generation 0


def test_build_words_sizes():
    for s in range(0, 9):
        got = build_words(s, 10)
        assert len(got) == 2**s if s >= 1 else 1
        # generation j contributes 2^j words
        for j in range(s):
            assert sum(1 for _, g in got if g == j) == max(2**j, 1)


def test_build_words_rejects_overlong():
    with pytest.raises(ValueError):
        build_words(6, 4)
    with pytest.raises(ValueError):
        build_words(-1, 4)


def test_ell_known():
    assert ell(3, LT + LE, 3) == 3
    assert ell(3, GE + LT, 3) == 1  # digits(4, 3) = [1, 1]
    with pytest.raises(ValueError):
        ell(3, LT + LE + LE, 3)


def test_s_set_known():
    assert s_set(3, LT + LE, 3) == {0, 3}
    assert s_set(3, GE + LT, 3) == {1, 2}
    # < at a position whose digit is 0 empties the set: digits(3, 3) = [0, 1]
    assert s_set(2, LT + LE, 3) == set()


def test_kind():
    assert kind(LT + LE * 4, -1) == BASE
    assert kind(GE + LT + LE * 3, 0) == FIRST
    assert kind(LT + GT + LT + LE + LE, 1) == SECOND
    with pytest.raises(AssertionError):
        kind(LE + LT, 0)
    with pytest.raises(AssertionError):
        kind(GT + LT, 1)


def test_prune_known():
    surv = pruned_words(3, 3)
    assert [(pw.word, pw.ell) for pw in surv] == [(LT + LE, 3), (GE + LT, 1)]
    surv = pruned_words(2, 3)  # digits(3,3) = [0,1] removes the base word
    assert [(pw.word, pw.ell) for pw in surv] == [(GE + LT, 2)]


def test_prune_drops_negatives_only_on_request():
    entries = build_words(2, 1)
    for k in range(0, 60):
        with_neg = prune(entries, k, 3, drop_negative=False) if len(digits(k + 1, 3)) == 2 else None
        if with_neg is None:
            continue
        nonneg = prune(entries, k, 3)
        assert nonneg == [pw for pw in with_neg if pw.ell >= 0]


def test_dedup_keeps_latest():
    # digits(3, 3) = [0, 1]: base word and the first-generation word tie at 2
    entries = build_words(2, 1)
    a = digits(2 + 1, 3)
    assert a == [0, 1]
    kept = prune(entries, 2, 3)
    assert len(kept) == 1 and kept[0].gen == 0


@pytest.mark.parametrize("p", PRIMES)
def test_covering_partition(p):
    # for weights whose digits avoid 0 and p-1, the surviving subsets tile
    # {0, ..., k} and the smallest element recovers the weight drop
    for k in range(0, 1001):
        dg = digits(k + 1, p)
        if any(d in (0, p - 1) for d in dg):
            continue
        seen = []
        for pw in pruned_words(k, p):
            block = s_set(k, pw.word, p)
            assert block, pw
            assert min(block) == (k - pw.ell) // 2
            seen.extend(block)
        assert sorted(seen) == list(range(k + 1)), f"k={k}, p={p}"


@pytest.mark.parametrize("p", PRIMES)
def test_min_element_matches_weight_drop(p):
    for k in range(0, 301):
        for pw in pruned_words(k, p):
            block = s_set(k, pw.word, p)
            if block:
                assert min(block) == (k - pw.ell) // 2
