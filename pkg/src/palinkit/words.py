"""Immutable words over small alphabets: reversal, palindromes, factors.

Symbols are dense integer ids (0..size-1) so downstream automata can index
transition arrays directly.  The public factor API is 1-based and inclusive;
Python-style 0-based slicing stays available on ``Word`` for internal use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import AlphabetError, WordRangeError

MAX_ALPHABET = 255


@dataclass(frozen=True)
class Alphabet:
    """An ordered tuple of distinct symbol labels, at most 255 of them."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.labels) > MAX_ALPHABET:
            raise AlphabetError(f"alphabet too large: {len(self.labels)} > {MAX_ALPHABET}")
        if len(set(self.labels)) != len(self.labels):
            raise AlphabetError("alphabet labels must be distinct")

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def char_mode(self) -> bool:
        """True when every label is a single character (words render joined)."""
        return all(len(lab) == 1 for lab in self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise AlphabetError(f"label {label!r} not in alphabet {self.labels}") from None

    @staticmethod
    def from_chars(chars: str) -> "Alphabet":
        return Alphabet(tuple(chars))

    @staticmethod
    def letters(size: int) -> "Alphabet":
        """The first ``size`` lowercase letters: a, b, c, ..."""
        if not 1 <= size <= 26:
            raise AlphabetError("letters alphabet supports sizes 1..26")
        return Alphabet(tuple("abcdefghijklmnopqrstuvwxyz"[:size]))


BINARY = Alphabet(("0", "1"))


def merge_alphabets(a: Alphabet, b: Alphabet) -> Alphabet:
    if a == b:
        return a
    return Alphabet(tuple(sorted(set(a.labels) | set(b.labels))))


class Word:
    """An immutable sequence of symbol ids over a fixed alphabet.

    Equality and hashing use the label sequence, so the same text parsed over
    different (sub)alphabets compares equal.
    """

    __slots__ = ("_ids", "_alphabet", "_labels", "_hash")

    def __init__(self, ids: Iterable[int], alphabet: Alphabet):
        ids = tuple(ids)
        size = alphabet.size
        for s in ids:
            if not 0 <= s < size:
                raise AlphabetError(f"symbol id {s} outside alphabet of size {size}")
        object.__setattr__(self, "_ids", ids)
        object.__setattr__(self, "_alphabet", alphabet)
        object.__setattr__(self, "_labels", None)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _from_trusted(cls, ids: tuple[int, ...], alphabet: Alphabet) -> "Word":
        # internal fast path for ids already known to fit the alphabet
        # (slices, concatenations and reversals of validated words)
        self = object.__new__(cls)
        object.__setattr__(self, "_ids", ids)
        object.__setattr__(self, "_alphabet", alphabet)
        object.__setattr__(self, "_labels", None)
        object.__setattr__(self, "_hash", None)
        return self

    @property
    def ids(self) -> tuple[int, ...]:
        return self._ids

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    def labels(self) -> tuple[str, ...]:
        cached = self._labels
        if cached is None:
            labs = self._alphabet.labels
            cached = tuple(labs[s] for s in self._ids)
            object.__setattr__(self, "_labels", cached)
        return cached

    # -- parsing / rendering -------------------------------------------------

    @staticmethod
    def parse(text: str, alphabet: Alphabet | None = None) -> "Word":
        """Read a word from text.

        Two forms are accepted: a plain string of single-character symbols, or
        a comma-separated list of integer symbol ids (for larger alphabets).
        With no explicit alphabet the character form infers the sorted set of
        distinct characters; the integer form uses ids 0..max verbatim.
        """
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
            try:
                values = [int(p) for p in parts]
            except ValueError as exc:
                raise AlphabetError(f"bad integer symbol in {text!r}") from exc
            if any(v < 0 for v in values):
                raise AlphabetError("integer symbols must be nonnegative")
            if alphabet is None:
                alphabet = Alphabet(tuple(str(i) for i in range(max(values) + 1)))
            return Word(values, alphabet)
        for ch in text:
            if len(ch.encode("utf-8")) != 1:
                raise AlphabetError(f"symbol {ch!r} is not a single byte; use the comma form")
        if alphabet is None:
            alphabet = Alphabet(tuple(sorted(set(text))))
        return Word((alphabet.index(ch) for ch in text), alphabet)

    def text(self) -> str:
        """Render back to parseable text (joined chars, or comma-separated)."""
        labs = self.labels()
        if self._alphabet.char_mode:
            return "".join(labs)
        return ",".join(labs)

    def __repr__(self) -> str:
        return f"Word({self.text()!r})"

    # -- sequence protocol ----------------------------------------------------

    def __len__(self) -> int:
        return len(self._ids)

    def __iter__(self) -> Iterator[int]:
        return iter(self._ids)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word._from_trusted(self._ids[item], self._alphabet)
        return self._ids[item]

    def __bool__(self) -> bool:
        return bool(self._ids)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        if self._alphabet == other._alphabet:
            return self._ids == other._ids
        return self.labels() == other.labels()

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self.labels())
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if self._alphabet == other._alphabet:
            return Word._from_trusted(self._ids + other._ids, self._alphabet)
        merged = merge_alphabets(self._alphabet, other._alphabet)
        return self.over(merged) + other.over(merged)

    def __mul__(self, times: int) -> "Word":
        return Word._from_trusted(self._ids * times, self._alphabet)

    def over(self, alphabet: Alphabet) -> "Word":
        """Re-express this word over a superset alphabet (label lookup)."""
        if alphabet == self._alphabet:
            return self
        return Word((alphabet.index(lab) for lab in self.labels()), alphabet)

    # -- affix predicates (label-based so alphabets may differ) ---------------

    def is_prefix_of(self, other: "Word") -> bool:
        if len(self) > len(other):
            return False
        if self._alphabet == other._alphabet:
            return other._ids[: len(self)] == self._ids
        return other.labels()[: len(self)] == self.labels()

    def is_suffix_of(self, other: "Word") -> bool:
        if len(self) > len(other):
            return False
        if len(self) == 0:
            return True
        if self._alphabet == other._alphabet:
            return other._ids[-len(self):] == self._ids
        return other.labels()[-len(self):] == self.labels()

    def factor(self, i: int, j: int) -> "Word":
        """The factor from position i to j, 1-based and inclusive."""
        if not 1 <= i <= j <= len(self):
            raise WordRangeError(f"factor indices ({i},{j}) invalid for length {len(self)}")
        return Word._from_trusted(self._ids[i - 1 : j], self._alphabet)


def empty_word(alphabet: Alphabet = BINARY) -> Word:
    return Word((), alphabet)


def reverse(w: Word) -> Word:
    """The mirror image of w; the empty word maps to itself."""
    return Word._from_trusted(w.ids[::-1], w.alphabet)


def is_palindrome(w: Word) -> bool:
    """True iff w reads the same in both directions (the empty word does)."""
    ids = w.ids
    return ids == ids[::-1]


def factor(w: Word, i: int, j: int) -> Word:
    """1-based inclusive factor w[i..j]; raises WordRangeError out of range."""
    return w.factor(i, j)


def enumerate_factors(w: Word) -> Iterator[Word]:
    """Every distinct factor of w exactly once, the empty word first, then by
    first occurrence ordered by start and end position."""
    yield Word((), w.alphabet)
    ids = w.ids
    n = len(ids)
    seen: set[tuple[int, ...]] = set()
    for i in range(n):
        for j in range(i + 1, n + 1):
            piece = ids[i:j]
            if piece not in seen:
                seen.add(piece)
                yield Word(piece, w.alphabet)


def palindromic_prefixes(w: Word) -> list[int]:
    """Strictly increasing lengths of all palindromic prefixes, including 0
    for the empty prefix."""
    ids = w.ids
    out = [0]
    for length in range(1, len(ids) + 1):
        p = ids[:length]
        if p == p[::-1]:
            out.append(length)
    return out
