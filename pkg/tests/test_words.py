import pytest
from hypothesis import given, strategies as st

from palinkit import (
    Alphabet,
    AlphabetError,
    Word,
    WordRangeError,
    enumerate_factors,
    factor,
    is_palindrome,
    palindromic_prefixes,
    reverse,
)

import brute


def w(text: str) -> Word:
    return Word.parse(text)


binary_words = st.lists(st.integers(0, 1), max_size=30).map(
    lambda ids: Word(ids, Alphabet(("0", "1")))
)


@pytest.mark.parametrize(
    "text,expected",
    [("abc", "cba"), ("", ""), ("aba", "aba")],
)
def test_reverse_examples(text, expected):
    assert reverse(w(text)).text() == expected


@given(binary_words)
def test_reverse_involution(word):
    assert reverse(reverse(word)) == word


@pytest.mark.parametrize(
    "text,expected",
    [("011001", False), ("", True), ("1001", True)],
)
def test_is_palindrome_examples(text, expected):
    assert is_palindrome(w(text)) is expected


@pytest.mark.parametrize(
    "text,i,j,expected",
    [("011001", 2, 4, "110"), ("abc", 1, 3, "abc"), ("abc", 2, 2, "b")],
)
def test_factor_examples(text, i, j, expected):
    assert factor(w(text), i, j).text() == expected


@pytest.mark.parametrize("i,j", [(0, 2), (2, 1), (1, 4), (3, 3)])
def test_factor_range_errors(i, j):
    with pytest.raises(WordRangeError):
        factor(w("ab"), i, j)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("ab", {"", "a", "b", "ab"}),
        ("aa", {"", "a", "aa"}),
        ("", {""}),
    ],
)
def test_enumerate_factors_examples(text, expected):
    got = [f.text() for f in enumerate_factors(w(text))]
    assert len(got) == len(set(got))
    assert set(got) == expected


@given(binary_words)
def test_factor_count_bound(word):
    n = len(word)
    count = sum(1 for _ in enumerate_factors(word))
    assert count <= n * (n + 1) // 2 + 1


@pytest.mark.parametrize(
    "text,expected",
    [
        ("aabaa", [0, 1, 2, 5]),  # brute-checked below as well
        ("ab", [0, 1]),
        ("aaaa", [0, 1, 2, 3, 4]),
    ],
)
def test_palindromic_prefixes_examples(text, expected):
    assert palindromic_prefixes(w(text)) == expected


@given(binary_words)
def test_palindromic_prefixes_match_brute(word):
    assert palindromic_prefixes(word) == brute.pal_prefix_lengths(word.ids)
    if len(word):
        assert palindromic_prefixes(word)[:2] == [0, 1]


@given(binary_words, st.integers(0, 30))
def test_prefix_filter_property(word, cut):
    # palindromic prefixes of a prefix are exactly those of the word, cut off
    cut = min(cut, len(word))
    whole = [ell for ell in palindromic_prefixes(word) if ell <= cut]
    assert palindromic_prefixes(word[:cut]) == whole


def test_palindrome_iff_own_length_among_prefixes():
    for ids in brute.all_words(8):
        word = Word(ids, Alphabet(("0", "1")))
        expected = len(word) in palindromic_prefixes(word)
        assert is_palindrome(word) is expected


class TestParsing:
    def test_char_roundtrip(self):
        word = Word.parse("011001")
        assert word.text() == "011001"
        assert word.alphabet.labels == ("0", "1")

    def test_int_list(self):
        word = Word.parse("1,2,3,4,1")
        assert word.ids == (1, 2, 3, 4, 1)
        assert Word.parse(word.text()) == word

    def test_int_list_wide_alphabet_renders_commas(self):
        word = Word.parse("3,1,12")
        assert word.text() == "3,1,12"
        assert Word.parse(word.text()) == word

    def test_explicit_alphabet_rejects_foreign(self):
        with pytest.raises(AlphabetError):
            Word.parse("abc", Alphabet(("a", "b")))

    def test_multibyte_symbol_rejected(self):
        with pytest.raises(AlphabetError):
            Word.parse("abé")

    def test_alphabet_cap(self):
        with pytest.raises(AlphabetError):
            Alphabet(tuple(str(i) for i in range(256)))
        Alphabet(tuple(str(i) for i in range(255)))

    def test_equality_across_alphabets(self):
        narrow = Word.parse("1")
        wide = Word.parse("011001")[2:3]
        assert narrow == wide
        assert hash(narrow) == hash(wide)

    def test_concat_merges_alphabets(self):
        assert (Word.parse("0") + Word.parse("11001")).text() == "011001"
