import pytest

from boundedlang.errors import CapExceeded
from boundedlang.slender import (
    Loop,
    SlenderLanguage,
    enumerate_slender,
    in_progressions,
    regular_subset_contains,
    slender_recognizable_profile,
)


@pytest.fixture
def two_loops():
    return SlenderLanguage("abc", [("a", "b", "c"), ("b", "aa", "c")])


def test_profile_of_two_loop_language(two_loops):
    profile = two_loops.profile(64)
    assert profile[:6] == [0, 0, 2, 1, 2, 1]
    assert all(profile[n] == (2 if n % 2 == 0 else 1) for n in range(2, 65))
    assert two_loops.count_period == 2


def test_words_of_even_length_are_ordered(two_loops):
    assert two_loops.words_of_length(6) == ["abbbbc", "baaaac"]


def test_single_letter_loop_is_identity():
    lang = SlenderLanguage("a", [("", "a", "")])
    for n in range(100):
        assert lang.rep(n) == "a" * n
        assert lang.value("a" * n) == n


def test_rank_against_sorted_enumeration_oracle(two_loops):
    words = enumerate_slender(two_loops, 12)
    assert words[:5] == ["ac", "bc", "abc", "abbc", "baac"]
    for rank, w in enumerate(words):
        assert two_loops.value(w) == rank
        assert two_loops.rep(rank) == w


def test_finite_part_and_membership():
    lang = SlenderLanguage("ab", [("", "ab", "")], finite_part=["b", "bb"])
    words = enumerate_slender(lang, 6)
    assert words == ["", "b", "ab", "bb", "abab", "ababab"]
    assert [lang.rep(n) for n in range(6)] == words
    assert "abab" in lang and "ba" not in lang


def test_overlapping_pieces_rejected():
    with pytest.raises(ValueError):
        SlenderLanguage("a", [("", "a", ""), ("a", "aa", "")])


def test_empty_loop_word_rejected():
    with pytest.raises(ValueError):
        Loop("a", "", "b")


def test_cap_exceeded(two_loops):
    with pytest.raises(CapExceeded):
        two_loops.rep(10**6)
    with pytest.raises(CapExceeded):
        two_loops.value("a" + "b" * 300 + "c")


def test_round_trip_large_window():
    lang = SlenderLanguage("abc", [("a", "b", "c"), ("b", "aa", "c")], window=20_000)
    for n in range(0, 10_001, 37):
        assert lang.value(lang.rep(n)) == n


def test_profile_identity_on_a_star():
    lang = SlenderLanguage("a", [("", "a", "")])
    subset = slender_recognizable_profile(lang, [(2, 3)])
    assert str(subset) == "a^2(a^3)*"
    assert slender_recognizable_profile(lang, []).is_empty()


def test_profile_even_ranks_against_oracle(two_loops):
    subset = slender_recognizable_profile(two_loops, [(0, 2)])
    # periods along each loop divide lcm(|y|) * p = 4
    assert all(4 % pl.step == 0 for pl in subset.loops)
    big = SlenderLanguage("abc", [("a", "b", "c"), ("b", "aa", "c")], window=40)
    for rank, w in enumerate(enumerate_slender(big, 40)):
        assert regular_subset_contains(subset, two_loops, w) == (rank % 2 == 0)


def test_profile_with_finite_exceptions():
    lang = SlenderLanguage("ab", [("", "ab", "")], finite_part=["b", "bb"])
    progs = [(1, 0), (4, 3)]  # {1} ∪ 4 + 3N
    subset = slender_recognizable_profile(lang, progs)
    for rank, w in enumerate(enumerate_slender(SlenderLanguage("ab", [("", "ab", "")], ["b", "bb"], window=60), 60)):
        assert regular_subset_contains(subset, lang, w) == in_progressions(rank, progs)
