import math

import pytest
from hypothesis import given, strategies as st

from evenwalk.counting import ExponentProfile, class_multiplicity, ck_fast
from evenwalk.walks import (
    WalkPath,
    count_by_profile,
    count_closed_and_even,
    count_even_visiting,
    exponent_profile,
    is_even_visiting,
    iter_closed_walks,
    visit_stats,
)

# Figure walks: up/down sequences read off the matrix-element products
FIG1 = "UUDUDDUD"
FIG2 = "UUDDUDUD"


@st.composite
def closed_walks(draw, max_half=8):
    n = draw(st.integers(0, max_half))
    steps = [1] * n + [-1] * n
    return WalkPath(tuple(draw(st.permutations(steps))))


def test_walkpath_positions():
    w = WalkPath.from_string("UDDU")
    assert w.positions == (0, 1, 0, -1, 0)
    assert len(w) == 4
    assert w.closed


def test_is_even_visiting_examples():
    assert is_even_visiting(WalkPath.from_string("UDUD"))
    assert not is_even_visiting(WalkPath.from_string("UUDD"))


def test_figure_walks():
    fig1 = WalkPath.from_string(FIG1)
    assert fig1.positions == (0, 1, 2, 1, 2, 1, 0, 1, 0)
    assert fig1.width == 2
    assert is_even_visiting(fig1)
    assert not is_even_visiting(WalkPath.from_string(FIG2))


def test_non_closed_rejected():
    with pytest.raises(ValueError):
        is_even_visiting(WalkPath.from_string("UUD"))


@given(closed_walks())
def test_visit_and_edge_parity_agree(w):
    stats = visit_stats(w)
    by_sites = all(c % 2 == 0 for s, c in stats.visit_count.items() if s)
    by_edges = all(c % 2 == 0 for c in stats.up_step_count.values())
    assert by_sites == by_edges == is_even_visiting(w)
    assert sum(stats.visit_count.values()) == len(w) + 1
    assert sum(stats.up_step_count.values()) == len(w) // 2


@given(closed_walks())
def test_visit_counts_from_edge_counts(w):
    stats = visit_stats(w)
    ups = stats.up_step_count
    for s, c in stats.visit_count.items():
        expected = ups.get(s - 1, 0) + ups.get(s, 0) + (s == 0)
        assert c == expected


def test_count_examples():
    assert count_even_visiting(0) == 1
    assert count_even_visiting(2) == 0
    assert count_even_visiting(4) == 2
    assert count_even_visiting(8) == 14


@pytest.mark.parametrize("length", [1, 3, 6, 10, 14])
def test_count_zero_unless_multiple_of_four(length):
    assert count_even_visiting(length) == 0


def test_cap_is_enforced():
    with pytest.raises(ValueError):
        count_even_visiting(26)
    assert count_even_visiting(12, cap=12) == 116
    with pytest.raises(ValueError):
        count_even_visiting(16, cap=12)


@pytest.mark.parametrize("k", range(5))
def test_partition_of_closed_walks(k):
    closed, even = count_closed_and_even(4 * k)
    assert closed == math.comb(4 * k, 2 * k)
    odd = sum(1 for w in iter_closed_walks(4 * k) if not is_even_visiting(w))
    assert even + odd == closed


def test_threads_do_not_change_counts():
    assert count_closed_and_even(16, threads=4) == count_closed_and_even(16)


def test_profile_buckets_small():
    assert count_by_profile(4) == {
        ExponentProfile((), (2,)): 1,
        ExponentProfile((2,), ()): 1,
    }
    b8 = count_by_profile(8)
    assert b8[ExponentProfile((), (2, 2))] == 3
    assert sum(b8.values()) == 14


def test_profile_bucket_for_two_one():
    assert count_by_profile(12)[ExponentProfile((), (4, 2))] == 10


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_buckets_match_class_multiplicity(k):
    for profile, count in count_by_profile(4 * k).items():
        assert count == class_multiplicity(profile)
        assert profile.width <= k
        assert sum(profile.composition()) == k


def test_width_bound():
    for k in range(1, 5):
        for w in iter_closed_walks(4 * k):
            if is_even_visiting(w):
                assert w.width <= k


def test_exponent_profile_of_figure_walk():
    assert exponent_profile(WalkPath.from_string(FIG1)) == ExponentProfile((), (2, 2))
    assert exponent_profile(WalkPath.from_string("DUDU")) == ExponentProfile((2,), ())


def test_oracle_agrees_with_formula_to_k5():
    for k in range(6):
        assert count_even_visiting(4 * k) == ck_fast(k)
