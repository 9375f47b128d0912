import math

import pytest

from palinkit import Alphabet, AlphabetError, Eertree, Word, WordRangeError, thue_morse_prefix

import brute

BINARY = Alphabet(("0", "1"))


def build(text: str) -> Eertree:
    return Eertree.build(Word.parse(text))


def test_append_returns_longest_pal_suffix():
    tree = Eertree(Alphabet(("a", "b")))
    node = tree.append(0)
    assert tree.node(node).length == 1
    assert tree.node_count == 3
    tree.append(1)
    node = tree.append(0)  # "aba"
    assert tree.node(node).length == 3
    assert tree.node_word(node).text() == "aba"


def test_eertree_word_palindromes():
    word = Word.parse("eertree")
    tree = Eertree.build(word)
    assert tree.distinct_palindromes() == 7
    pals = {tree.node_word(i).text() for i in range(2, tree.node_count)}
    labels = word.alphabet.labels
    brute_pals = {
        "".join(labels[s] for s in p)
        for p in brute.distinct_palindromes(word.ids)
    }
    assert pals == brute_pals == {"e", "r", "t", "ee", "rtr", "ertre", "eertree"}


@pytest.mark.parametrize(
    "text,expected",
    [("aaaa", 4), ("ab", 2), ("011001", 6)],
)
def test_distinct_palindrome_counts(text, expected):
    # the 011001 value is brute-derived: {0, 1, 11, 00, 0110, 1001}
    assert len(brute.distinct_palindromes(Word.parse(text).ids)) == expected
    assert build(text).distinct_palindromes() == expected


@pytest.mark.parametrize(
    "text,i,expected",
    [("aabaa", 5, [1, 2, 5]), ("ab", 2, [1]), ("aaa", 3, [1, 2, 3])],
)
def test_pal_suffix_lengths_examples(text, i, expected):
    assert build(text).pal_suffix_lengths_at(i) == expected


def test_pal_suffix_lengths_out_of_range():
    tree = build("ab")
    with pytest.raises(WordRangeError):
        tree.pal_suffix_lengths_at(3)
    assert tree.pal_suffix_lengths_at(0) == []


def test_foreign_symbol_rejected():
    tree = Eertree(BINARY)
    with pytest.raises(AlphabetError):
        tree.append(2)


def test_exhaustive_against_brute():
    # distinct-palindrome counts for all binary words up to length 14,
    # per-prefix palindromic suffixes up to length 12
    for ids in brute.all_words(12):
        word = Word(ids, BINARY)
        tree = Eertree.build(word)
        assert tree.distinct_palindromes() == len(brute.distinct_palindromes(ids))
        assert tree.node_count <= len(ids) + 2
        for i in range(len(ids) + 1):
            assert tree.pal_suffix_lengths_at(i) == brute.pal_suffix_lengths(ids, i)
    for ids in brute.all_words(14, min_len=13):
        tree = Eertree.build(Word(ids, BINARY))
        assert tree.distinct_palindromes() == len(brute.distinct_palindromes(ids))


def test_suffix_chain_decreases_to_root():
    tree = build("01101001011010")
    for node_id in range(2, tree.node_count):
        v = node_id
        seen = 0
        while tree.node(v).length > 0:
            nxt = tree.node(v).suffix_link
            assert tree.node(nxt).length < tree.node(v).length
            v = nxt
            seen += 1
            assert seen <= tree.node_count
        assert v in (0, 1)


def test_series_chain_log_bound():
    # empirical: chain length <= ceil(log2(i)) + 2 at every step
    corpus = [
        Word.parse("0" * 300),
        Word.parse("01" * 150),
        thue_morse_prefix(600),
        Word.parse("001011010011001011" * 20),
    ]
    for word in corpus:
        tree = Eertree.build(word)
        for i in range(1, len(word) + 1):
            bound = math.ceil(math.log2(i)) + 2 if i > 1 else 2
            assert tree.series_chain_length_at(i) <= bound


def test_dense_and_dict_transitions_agree():
    wide = Alphabet(tuple("abcdefghij"))  # size 10 forces dict transitions
    narrow = Alphabet(tuple("ab"))
    text = "abaabbaababa"
    t_wide = Eertree.build(Word.parse(text, wide))
    t_narrow = Eertree.build(Word.parse(text, narrow))
    assert t_wide.distinct_palindromes() == t_narrow.distinct_palindromes()
    for i in range(len(text) + 1):
        assert t_wide.pal_suffix_lengths_at(i) == t_narrow.pal_suffix_lengths_at(i)


def test_dump_snapshot():
    tree = build("aba")
    assert tree.dump().splitlines() == [
        "0\t-1\t0\t0",
        "1\t0\t0\t1",
        "2\t1\t1\t1",  # "a"
        "3\t1\t1\t1",  # "b"
        "4\t3\t2\t2",  # "aba"
    ]


def test_first_occurrence_end_recorded():
    tree = build("abba")
    ends = {tree.node_word(i).text(): tree.node(i).occurrence_end for i in range(2, tree.node_count)}
    assert ends == {"a": 1, "b": 2, "bb": 3, "abba": 4}
