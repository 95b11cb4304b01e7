import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from evenwalk import counting
from evenwalk.counting import (
    BinomialTable,
    ConsistencyError,
    ExponentProfile,
    adjacency_product,
    binomial,
    chunk_bounds,
    ck_by_composition,
    ck_fast,
    ck_series,
    class_multiplicity,
    class_sum,
    composition_count,
    compositions,
    first_part_sums,
    origin_placements,
    unrank_composition,
)
from evenwalk.series import PUBLISHED_CK

compositions_st = st.lists(st.integers(1, 6), min_size=1, max_size=7).map(tuple)


def compositions_by_cuts(k):
    """Independent listing: choose cut points among the k-1 gaps, then sort."""
    out = []
    for r in range(k):
        for cuts in itertools.combinations(range(1, k), r):
            edges = (0,) + cuts + (k,)
            out.append(tuple(b - a for a, b in zip(edges, edges[1:])))
    return sorted(out)


# --- binomial ---------------------------------------------------------------

@pytest.mark.parametrize("n", [0, 1, 7, 40])
def test_binomial_identity(n):
    assert binomial(n, 0) == 1


def test_binomial_examples():
    assert binomial(3, 2) == 3
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0


def test_binomial_table_against_math_comb():
    table = BinomialTable(80)
    for a in range(81):
        for b in range(a + 3):
            assert table(a, b) == math.comb(a, b)


def test_binomial_table_grows_on_demand():
    table = BinomialTable(3)
    assert table(100, 50) == math.comb(100, 50)
    assert table.max_row == 100


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 0)


# --- compositions -----------------------------------------------------------

def test_compositions_small():
    assert list(compositions(1)) == [(1,)]
    assert list(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert sum(1 for _ in compositions(10)) == 512


@pytest.mark.parametrize("k", range(1, 11))
def test_compositions_lexicographic_and_complete(k):
    assert list(compositions(k)) == compositions_by_cuts(k)


def test_compositions_zero_is_empty_input():
    with pytest.raises(ValueError):
        list(compositions(0))


@pytest.mark.parametrize("k", [1, 5, 9])
def test_chunks_are_disjoint_and_cover(k):
    total = composition_count(k)
    pieces = []
    for lo, hi in chunk_bounds(total, 7):
        pieces.extend(compositions(k, lo, hi))
    assert pieces == list(compositions(k))


def test_unrank_bounds():
    assert unrank_composition(4, 0) == (1, 1, 1, 1)
    assert unrank_composition(4, 7) == (4,)
    with pytest.raises(IndexError):
        unrank_composition(4, 8)


# --- multiplicities ---------------------------------------------------------

def test_adjacency_product_examples():
    assert adjacency_product([5]) == 1
    assert adjacency_product([1, 1]) == 3
    assert adjacency_product([2, 1]) == 10


def test_adjacency_product_empty():
    with pytest.raises(ValueError):
        adjacency_product([])


@pytest.mark.parametrize("below, above, expected", [
    ((), (2, 2), 3),
    ((2,), (2,), 6),
    ((2, 2), (), 3),
    ((4,), (), 1),
    ((), (4,), 1),
])
def test_class_multiplicity_examples(below, above, expected):
    assert class_multiplicity(ExponentProfile(below, above)) == expected


@pytest.mark.parametrize("below, above", [((), (3,)), ((2,), (0,)), ((), ())])
def test_class_multiplicity_rejects_bad_exponents(below, above):
    with pytest.raises(ValueError):
        class_multiplicity(ExponentProfile(below, above))


def test_origin_placements():
    ps = origin_placements((1, 2))
    assert ps == [
        ExponentProfile((2, 4), ()),
        ExponentProfile((2,), (4,)),
        ExponentProfile((), (2, 4)),
    ]


def test_class_sum_examples():
    assert class_sum((1,)) == 2
    assert class_sum((1, 1)) == 12
    assert class_sum((2,)) == 2
    assert class_sum((1, 1)) + class_sum((2,)) == 14


def test_class_sum_flags_remainder(monkeypatch):
    # force an odd product so 2k*prod/n_1 cannot divide for n_1 = 4
    monkeypatch.setattr(counting, "adjacency_product", lambda parts: 1)
    with pytest.raises(ConsistencyError):
        class_sum((4, 1))


@given(compositions_st)
def test_exact_division_property(c):
    assert 2 * sum(c) * adjacency_product(c) % c[0] == 0


@given(compositions_st)
def test_class_sum_is_sum_over_placements(c):
    assert class_sum(c) == sum(class_multiplicity(p) for p in origin_placements(c))


@given(compositions_st)
def test_reversal_symmetry(c):
    assert class_sum(c) == class_sum(c[::-1])


def test_adjacency_product_is_placement_with_origin_at_bottom():
    for c in compositions(7):
        bottom = ExponentProfile((), tuple(2 * n for n in c))
        assert class_multiplicity(bottom) == adjacency_product(c)


# --- c_k --------------------------------------------------------------------

def test_ck_examples():
    assert ck_by_composition(0) == 1
    assert ck_by_composition(3) == 116
    assert ck_by_composition(16) == 9878971460641414
    assert ck_fast(2) == 14
    assert ck_fast(12) == 358298116092


@pytest.mark.parametrize("k", range(17))
def test_ck_matches_published(k):
    assert ck_by_composition(k) == PUBLISHED_CK[k]
    assert ck_fast(k) == PUBLISHED_CK[k]


def test_fast_equals_composition_sum_to_18():
    for k in range(19):
        assert ck_fast(k) == ck_by_composition(k)


def test_first_part_sums_against_enumeration():
    g = first_part_sums(9)
    for m in range(1, 10):
        for a in range(1, m + 1):
            brute = sum(adjacency_product(c) for c in compositions(m) if c[0] == a)
            assert g[m][a] == brute


def test_parallel_composition_sum_matches_serial():
    assert ck_by_composition(13, workers=3) == ck_by_composition(13) == PUBLISHED_CK[13]


def test_ck_series_methods_agree():
    assert ck_series(12, "dp") == ck_series(12, "compose") == list(PUBLISHED_CK[:13])
    with pytest.raises(ValueError):
        ck_series(3, "nope")


def test_counts_exceed_64_bits_without_loss():
    c30 = ck_fast(30)
    assert c30 > 2 ** 64
    assert isinstance(c30, int)


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 16))
def test_ratio_monotone_and_bounded(k):
    c = PUBLISHED_CK
    assert c[k] * c[k - 2] > c[k - 1] ** 2
    assert c[k] < 16 * c[k - 1]
