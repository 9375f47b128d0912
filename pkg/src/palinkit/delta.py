"""Quadruples (u, v, d, n) driving the suffix-plus-periodic-repetition
checks: d a nonempty palindrome, v a palindrome, u a nonempty suffix of d,
|dv| the minimal period of dvd, and n >= 3 PL(u).

For each valid quadruple and w = u (vd)^n the package can verify that every
long factor of w contains dvd, that every minimal palindromic factorization
of w has a central part of shape p d (vd)^gamma p^R with gamma >= 1, and
that PL(w) >= PL(u).  Failures raise FalsificationError with the offending
inputs serialized.

The dvd-factor and main-theorem checks hold on every quadruple scanned so
far.  The central-witness check is genuinely falsifiable: the shape is only
forced when some factorization part has length >= 3|vd|, which needs
n >= 3 PL(w); quadruples only guarantee n >= 3 PL(u), so cases with
PL(w) > PL(u) can and do fail (first counterexample: u=a, v=bb, d=aba, n=3,
where two of the six factorizations have only a p d p^R part, gamma = 0).
Restricted to n >= 3 PL(w) the witness check passes everywhere scanned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import FalsificationError, PreconditionError
from .palen import Factorization, mpf_enumerate, pl_oracle, pl_profile_fast
from .periodicity import min_period
from .words import Alphabet, Word, is_palindrome, merge_alphabets, reverse


def _normalize(u: Word, v: Word, d: Word) -> tuple[Word, Word, Word]:
    alphabet = merge_alphabets(merge_alphabets(u.alphabet, v.alphabet), d.alphabet)
    return u.over(alphabet), v.over(alphabet), d.over(alphabet)


@dataclass(frozen=True)
class DeltaQuad:
    """A validated quadruple; construct via ``make`` to enforce the rules."""

    u: Word
    v: Word
    d: Word
    n: int

    @staticmethod
    def make(u: Word, v: Word, d: Word, n: int) -> "DeltaQuad":
        u, v, d = _normalize(u, v, d)
        if not delta_check(u, v, d, n):
            raise PreconditionError(
                f"({u.text()!r}, {v.text()!r}, {d.text()!r}, {n}) is not a valid quadruple"
            )
        return DeltaQuad(u=u, v=v, d=d, n=n)

    def word(self) -> Word:
        return self.u + (self.v + self.d) * self.n

    def as_dict(self) -> dict:
        return {"u": self.u.text(), "v": self.v.text(), "d": self.d.text(), "n": self.n}


def delta_conditions(u: Word, v: Word, d: Word, n: int) -> dict[str, bool]:
    """Each defining condition separately, for diagnostics."""
    u, v, d = _normalize(u, v, d)
    dvd = d + v + d
    return {
        "d_nonempty_palindrome": len(d) >= 1 and is_palindrome(d),
        "v_palindrome": is_palindrome(v),
        "u_nonempty_suffix_of_d": len(u) >= 1 and u.is_suffix_of(d),
        "dv_is_min_period_of_dvd": len(dvd) >= 1 and min_period(dvd) == len(d) + len(v),
        "n_at_least_3_pl_u": len(u) >= 1 and n >= 3 * pl_oracle(u),
    }


def delta_check(u: Word, v: Word, d: Word, n: int) -> bool:
    """True iff (u, v, d, n) satisfies all five defining conditions."""
    return all(delta_conditions(u, v, d, n).values())


def delta_enumerate(
    alphabet_size: int,
    max_d: int,
    max_v: int,
    max_n_slack: int,
) -> Iterator[DeltaQuad]:
    """Every valid quadruple with |d| <= max_d, |v| <= max_v, u ranging over
    the nonempty suffixes of d, and n from 3 PL(u) up to 3 PL(u) + slack.

    Deterministic order: d by (length, symbols), then v likewise (the empty
    word first), then u by increasing length, then n ascending.
    """
    if alphabet_size < 2:
        raise PreconditionError("alphabet_size must be at least 2")
    alphabet = Alphabet.letters(alphabet_size)

    def words_through(max_len: int, min_len: int) -> Iterator[Word]:
        for length in range(min_len, max_len + 1):
            for tup in product(range(alphabet_size), repeat=length):
                yield Word(tup, alphabet)

    for d in words_through(max_d, 1):
        if not is_palindrome(d):
            continue
        for v in words_through(max_v, 0):
            if not is_palindrome(v):
                continue
            if min_period(d + v + d) != len(d) + len(v):
                continue
            for u_len in range(1, len(d) + 1):
                u = d[len(d) - u_len :]
                base = 3 * pl_oracle(u)
                for slack in range(max_n_slack + 1):
                    n = base + slack
                    if delta_check(u, v, d, n):
                        yield DeltaQuad(u=u, v=v, d=d, n=n)


def check_dvd_factor(q: DeltaQuad) -> bool:
    """Every factor of u(vd)^n of length at least 3|vd| contains dvd.

    It suffices to check every window of length exactly 3|vd|: longer factors
    start with such a window.  Occurrences of dvd are located once with a
    byte-level search and each window is matched against the next occurrence.
    """
    w = q.word()
    ids = w.ids
    target = (q.d + q.v + q.d).over(w.alphabet).ids
    vd_len = len(q.v) + len(q.d)
    window = 3 * vd_len
    hay = bytes(ids)
    needle = bytes(target)
    occurrences = []
    pos = hay.find(needle)
    while pos != -1:
        occurrences.append(pos)
        pos = hay.find(needle, pos + 1)
    ptr = 0
    latest_start = window - len(target)
    for i in range(len(ids) - window + 1):
        while ptr < len(occurrences) and occurrences[ptr] < i:
            ptr += 1
        if ptr >= len(occurrences) or occurrences[ptr] > i + latest_start:
            return False
    return True


@dataclass(frozen=True)
class CentralWitness:
    """Part index j (1-based), proper suffix p of dv, and exponent gamma with
    t_j = p d (vd)^gamma p^R."""

    j: int
    p: Word
    gamma: int


def find_central_palindrome(q: DeltaQuad) -> dict[Factorization, CentralWitness]:
    """For every minimal palindromic factorization of u(vd)^n, locate a part
    of the central shape p d (vd)^gamma p^R with gamma >= 1 and p a proper
    suffix of dv.  A factorization without one raises FalsificationError;
    see the module notes on when that genuinely happens."""
    w = q.word()
    d, v = q.d, q.v
    dv = d + v
    vd_len = len(v) + len(d)
    witnesses: dict[Factorization, CentralWitness] = {}
    p_candidates = [dv[len(dv) - m :] for m in range(len(dv))]
    for fact in mpf_enumerate(w):
        found = None
        for j, part in enumerate(fact.parts, start=1):
            for p in p_candidates:
                body = len(part) - 2 * len(p) - len(d)
                if body < vd_len or body % vd_len != 0:
                    continue
                gamma = body // vd_len
                candidate = p + d + (v + d) * gamma + reverse(p)
                if candidate == part:
                    found = CentralWitness(j=j, p=p, gamma=gamma)
                    break
            if found is not None:
                break
        if found is None:
            raise FalsificationError(
                "minimal factorization lacks a central palindrome of shape "
                "p d (vd)^gamma p^R",
                {"quad": q.as_dict(), "factorization": fact.render()},
            )
        witnesses[fact] = found
    return witnesses


@dataclass(frozen=True)
class TheoremCheck:
    pl_u: int
    pl_w: int
    holds: bool


def check_main_theorem(q: DeltaQuad) -> TheoremCheck:
    """Compare PL(u(vd)^n) against PL(u); the fast value is cross-checked by
    the reference oracle on words up to length 64."""
    w = q.word()
    pl_u = pl_oracle(q.u)
    pl_w = pl_profile_fast(w).final
    if len(w) <= 64 and pl_w != pl_oracle(w):
        raise FalsificationError(
            "fast palindromic length disagrees with the oracle",
            {"quad": q.as_dict(), "word": w.text()},
        )
    return TheoremCheck(pl_u=pl_u, pl_w=pl_w, holds=pl_w >= pl_u)


@dataclass(frozen=True)
class DeltaRecord:
    """One verification row, serialized to JSON-lines by reports."""

    u: str
    v: str
    d: str
    n: int
    pl_u: int
    pl_w: int
    dvd_factor_ok: bool
    central_witness_ok: bool
    theorem_ok: bool

    def as_dict(self) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "d": self.d,
            "n": self.n,
            "pl_u": self.pl_u,
            "pl_w": self.pl_w,
            "dvd_factor_ok": self.dvd_factor_ok,
            "central_witness_ok": self.central_witness_ok,
            "theorem_ok": self.theorem_ok,
        }


def verify_quad(q: DeltaQuad) -> DeltaRecord:
    """Run all three checks on one quadruple and report the outcome flags."""
    dvd_ok = check_dvd_factor(q)
    try:
        find_central_palindrome(q)
        central_ok = True
    except FalsificationError:
        central_ok = False
    theorem = check_main_theorem(q)
    return DeltaRecord(
        u=q.u.text(),
        v=q.v.text(),
        d=q.d.text(),
        n=q.n,
        pl_u=theorem.pl_u,
        pl_w=theorem.pl_w,
        dvd_factor_ok=dvd_ok,
        central_witness_ok=central_ok,
        theorem_ok=theorem.holds,
    )
