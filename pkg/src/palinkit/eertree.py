"""Online palindromic tree (eertree) with suffix links and series links.

One node per distinct nonempty palindromic factor, plus the two permanent
roots (lengths -1 and 0).  ``series_link`` jumps to the longest palindromic
suffix whose period differs from the node's own period; chains of series
links have logarithmic length, which is what makes the fast palindromic
length recurrence cheap.

Storage is flat parallel lists indexed by node id; transitions are a dense
flat array for alphabets of size <= 8 and per-node dicts above that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlphabetError, WordRangeError
from .words import Alphabet, Word

_DENSE_LIMIT = 8


@dataclass(frozen=True)
class EertreeNode:
    """Read-only view of one node."""

    id: int
    length: int
    suffix_link: int
    series_link: int
    transitions: dict[int, int]
    occurrence_end: int | None


class Eertree:
    """Grows one symbol at a time; records the longest-palindromic-suffix
    node after every step so per-prefix queries stay O(answer)."""

    def __init__(self, alphabet: Alphabet):
        self._alphabet = alphabet
        self._sigma = alphabet.size
        self._dense = self._sigma <= _DENSE_LIMIT
        self._word: list[int] = []
        # node 0: imaginary root (length -1); node 1: empty root (length 0)
        self._len = [-1, 0]
        self._suf = [0, 0]
        self._diff = [0, 0]
        self._series = [0, 1]
        self._first_end: list[int | None] = [None, None]
        if self._dense:
            self._trans: list[int] = [-1] * (2 * self._sigma)
        else:
            self._dict_trans: list[dict[int, int]] = [{}, {}]
        self._last = 1
        self._last_per_pos: list[int] = []

    @classmethod
    def build(cls, w: Word) -> "Eertree":
        tree = cls(w.alphabet)
        for s in w.ids:
            tree.append(s)
        return tree

    # -- growth ---------------------------------------------------------------

    def append(self, symbol: int) -> int:
        """Extend the underlying word by one symbol; returns the node id of
        the longest palindromic suffix of the extended word.  At most one new
        node is created."""
        sigma = self._sigma
        if not 0 <= symbol < sigma:
            raise AlphabetError(f"symbol id {symbol} outside alphabet of size {sigma}")
        word = self._word
        lens = self._len
        sufs = self._suf
        i = len(word)
        word.append(symbol)

        v = self._last
        while True:
            k = i - lens[v] - 1
            if k >= 0 and word[k] == symbol:
                break
            v = sufs[v]

        if self._dense:
            t = self._trans[v * sigma + symbol]
        else:
            t = self._dict_trans[v].get(symbol, -1)
        if t != -1:
            self._last = t
            self._last_per_pos.append(t)
            return t

        m = len(lens)
        new_len = lens[v] + 2
        if new_len == 1:
            sl = 1
        else:
            u = sufs[v]
            while True:
                k = i - lens[u] - 1
                if k >= 0 and word[k] == symbol:
                    break
                u = sufs[u]
            if self._dense:
                sl = self._trans[u * sigma + symbol]
            else:
                sl = self._dict_trans[u][symbol]
        lens.append(new_len)
        sufs.append(sl)
        d = new_len - lens[sl]
        self._diff.append(d)
        self._series.append(sl if d != self._diff[sl] else self._series[sl])
        self._first_end.append(i + 1)
        if self._dense:
            self._trans.extend([-1] * sigma)
            self._trans[v * sigma + symbol] = m
        else:
            self._dict_trans.append({})
            self._dict_trans[v][symbol] = m
        self._last = m
        self._last_per_pos.append(m)
        return m

    def extend(self, symbols) -> None:
        for s in symbols:
            self.append(s)

    # -- queries --------------------------------------------------------------

    def __len__(self) -> int:
        """Number of symbols appended so far."""
        return len(self._word)

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def node_count(self) -> int:
        return len(self._len)

    def distinct_palindromes(self) -> int:
        """Count of distinct nonempty palindromic factors of the current word."""
        return len(self._len) - 2

    def node(self, node_id: int) -> EertreeNode:
        if not 0 <= node_id < len(self._len):
            raise WordRangeError(f"no node {node_id}")
        if self._dense:
            sigma = self._sigma
            base = node_id * sigma
            trans = {
                c: self._trans[base + c]
                for c in range(sigma)
                if self._trans[base + c] != -1
            }
        else:
            trans = dict(self._dict_trans[node_id])
        return EertreeNode(
            id=node_id,
            length=self._len[node_id],
            suffix_link=self._suf[node_id],
            series_link=self._series[node_id],
            transitions=trans,
            occurrence_end=self._first_end[node_id],
        )

    def node_word(self, node_id: int) -> Word:
        """The palindrome a node stands for (roots give the empty word)."""
        length = self._len[node_id]
        if length <= 0:
            return Word((), self._alphabet)
        end = self._first_end[node_id]
        return Word(self._word[end - length : end], self._alphabet)

    def last_node_at(self, i: int) -> int:
        """Node id of the longest palindromic suffix of the length-i prefix."""
        if not 0 <= i <= len(self._word):
            raise WordRangeError(f"prefix length {i} out of range")
        if i == 0:
            return 1
        return self._last_per_pos[i - 1]

    def pal_suffix_lengths_at(self, i: int) -> list[int]:
        """Sorted lengths of all palindromic suffixes of the length-i prefix,
        read off the suffix-link chain of the recorded step-i node."""
        v = self.last_node_at(i)
        lens = self._len
        sufs = self._suf
        out = []
        while lens[v] > 0:
            out.append(lens[v])
            v = sufs[v]
        out.reverse()
        return out

    def series_chain_length_at(self, i: int) -> int:
        """Number of series-link hops from the step-i node down to a root."""
        v = self.last_node_at(i)
        hops = 0
        while self._len[v] > 0:
            hops += 1
            v = self._series[v]
        return hops

    def dump(self) -> str:
        """Text edge list: one line per node with id, length, suffix link id,
        and series link id."""
        lines = [
            f"{i}\t{self._len[i]}\t{self._suf[i]}\t{self._series[i]}"
            for i in range(len(self._len))
        ]
        return "\n".join(lines)
