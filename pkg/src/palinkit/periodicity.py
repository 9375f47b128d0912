"""Periods, minimal periods, and decompositions of periodic palindromes.

A period p of w means w[i] = w[i+p] wherever both sides exist, with p < |w|;
exponents are kept as exact fractions so results like 5/4 compare exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FalsificationError, PreconditionError
from .words import Word, is_palindrome


@dataclass(frozen=True)
class PeriodEntry:
    """A period root length together with the exact exponent |w| / root."""

    root_length: int
    exponent: Fraction


@dataclass(frozen=True)
class PeriodDecomposition:
    """Palindromes a (possibly empty) and b (nonempty) with |ab| equal to the
    decomposed period and (ab)^k a reconstructing the original palindrome."""

    a: Word
    b: Word
    exponent_k: int
    tail: bool

    def reconstruct(self) -> Word:
        return (self.a + self.b) * self.exponent_k + self.a


def border_array(w: Word) -> list[int]:
    """Failure function: entry i is the longest proper border of the length
    (i+1) prefix.  Standard linear-time computation."""
    ids = w.ids
    n = len(ids)
    if n == 0:
        raise PreconditionError("border_array requires a nonempty word")
    borders = [0] * n
    k = 0
    for i in range(1, n):
        while k > 0 and ids[i] != ids[k]:
            k = borders[k - 1]
        if ids[i] == ids[k]:
            k += 1
        borders[i] = k
    return borders


def _is_period(ids: tuple[int, ...], p: int) -> bool:
    return ids[p:] == ids[:-p]


def period_set(w: Word) -> list[PeriodEntry]:
    """All proper periods of w with their exact exponents, ascending."""
    ids = w.ids
    n = len(ids)
    if n == 0:
        raise PreconditionError("period_set requires a nonempty word")
    return [
        PeriodEntry(p, Fraction(n, p))
        for p in range(1, n)
        if _is_period(ids, p)
    ]


def min_period(w: Word) -> int | None:
    """The least proper period of w, or None when no proper period exists."""
    ids = w.ids
    n = len(ids)
    if n == 0:
        raise PreconditionError("min_period requires a nonempty word")
    for p in range(1, n):
        if _is_period(ids, p):
            return p
    return None


def decompose_periodic_palindrome(w: Word, p: int) -> PeriodDecomposition:
    """Split a periodic palindrome w with period p as (ab)^k a.

    With |ab| = p and b nonempty, |a| is forced to |w| mod p, so the split is
    unique; that both halves come out palindromic is the guaranteed property
    being verified here, and a failure raises FalsificationError.
    """
    n = len(w)
    if n == 0 or not is_palindrome(w):
        raise PreconditionError("decompose_periodic_palindrome requires a nonempty palindrome")
    if not 1 <= p < n or not _is_period(w.ids, p):
        raise PreconditionError(f"{p} is not a period of the given word")
    rem = n % p
    a = w[:rem]
    b = w[rem:p]
    k = (n - rem) // p
    ok = (
        is_palindrome(a)
        and is_palindrome(b)
        and len(b) >= 1
        and k >= 1
        and ((a + b) * k + a).ids == w.ids
    )
    if not ok:
        raise FalsificationError(
            "periodic palindrome did not split into palindromes a, b",
            {"word": w.text(), "period": p},
        )
    return PeriodDecomposition(a=a, b=b, exponent_k=k, tail=bool(a))


def period_from_palindromic_affix(w: Word, u: Word) -> int:
    """Given a palindrome w and a proper palindromic prefix or suffix u,
    return |w| - |u|, verified to be a period of w."""
    if len(w) == 0 or not is_palindrome(w):
        raise PreconditionError("w must be a nonempty palindrome")
    if not is_palindrome(u):
        raise PreconditionError("u must be a palindrome")
    if len(u) >= len(w):
        raise PreconditionError("u must be a proper affix of w")
    if not (u.is_prefix_of(w) or u.is_suffix_of(w)):
        raise PreconditionError("u is neither a prefix nor a suffix of w")
    p = len(w) - len(u)
    if not _is_period(w.ids, p):
        raise FalsificationError(
            "affix difference is not a period of the palindrome",
            {"word": w.text(), "affix": u.text(), "period": p},
        )
    return p
