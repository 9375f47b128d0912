"""The palindromic-prefix density scanner.

A factor t of w is a member of the scan report for bound k when its number
of palindromic prefixes (the empty word counts) reaches the threshold
(|t| / k)^(1/k).  Membership is decided with exact integer arithmetic:
count^k * k >= |t|, so boundary cases never depend on floating-point roots.

``extract_periodic_prefix`` follows the constructive route from a pair of
close palindromic prefix lengths to a periodic palindromic prefix (ab)^e a
with palindromes a, b and a large exponent.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from . import runtime
from .errors import FalsificationError, PreconditionError, ResourceLimitError
from .periodicity import decompose_periodic_palindrome, period_from_palindromic_affix
from .words import Word, palindromic_prefixes


def tau(n: int, k: int) -> float:
    """The membership threshold (n/k)^(1/k); monotone nondecreasing in n."""
    if n < 1 or k < 1:
        raise PreconditionError("tau requires n >= 1 and k >= 1")
    return (n / k) ** (1.0 / k)


def _meets_threshold(count_with_eps: int, length: int, k: int, strict: bool) -> bool:
    lhs = count_with_eps**k * k
    return lhs > length if strict else lhs >= length


def omega_member(t: Word, k: int, strict: bool = False) -> bool:
    """Exact membership test for a single factor.

    Counts palindromic prefixes including the empty one and compares
    count^k * k against |t| (strictly, when requested)."""
    if len(t) < 1:
        raise PreconditionError("omega_member requires a nonempty factor")
    if k < 1:
        raise PreconditionError("k must be positive")
    count = len(palindromic_prefixes(t))
    return _meets_threshold(count, len(t), k, strict)


@dataclass(frozen=True)
class OmegaMember:
    """One report row; start/end are 1-based inclusive positions of the
    factor's first occurrence in the scanned word."""

    start: int
    end: int
    length: int
    count_with_eps: int
    count_without_eps: int
    threshold_num: int
    threshold_den_power: int

    def as_dict(self) -> dict:
        return {
            "start": self.start,
            "end": self.end,
            "length": self.length,
            "count_with_eps": self.count_with_eps,
            "count_without_eps": self.count_without_eps,
            "threshold_num": self.threshold_num,
            "threshold_den_power": self.threshold_den_power,
        }


CSV_COLUMNS = (
    "start,end,length,count_with_eps,count_without_eps,"
    "threshold_num,threshold_den_power"
)


@dataclass
class OmegaReport:
    k: int
    scanned_prefix_length: int
    strict: bool
    members: list[OmegaMember]
    # whether k really bounds the palindromic length of every factor; only
    # computed for words up to length 200, None otherwise
    k_covers_factor_pl: bool | None = None

    @property
    def member_count(self) -> int:
        return len(self.members)

    @property
    def max_count_with_eps(self) -> int:
        return max((m.count_with_eps for m in self.members), default=0)

    def to_jsonl_lines(self) -> list[str]:
        import json

        return [
            json.dumps(m.as_dict(), separators=(",", ":")) for m in self.members
        ]

    def to_csv_lines(self) -> list[str]:
        lines = [CSV_COLUMNS]
        lines.extend(
            f"{m.start},{m.end},{m.length},{m.count_with_eps},"
            f"{m.count_without_eps},{m.threshold_num},{m.threshold_den_power}"
            for m in self.members
        )
        return lines


def _pal_ends_by_start(ids: tuple[int, ...]) -> list[list[int]]:
    """For every start position, the sorted 0-based end positions of the
    palindromic factors beginning there.  Manacher plus an occurrence sweep,
    linear in the number of palindromic occurrences."""
    n = len(ids)
    odd = [0] * n
    left, right = 0, -1
    for i in range(n):
        k = 1 if i > right else min(odd[left + right - i], right - i + 1)
        while i - k >= 0 and i + k < n and ids[i - k] == ids[i + k]:
            k += 1
        odd[i] = k
        if i + k - 1 > right:
            left, right = i - k + 1, i + k - 1
    even = [0] * n
    left, right = 0, -1
    for i in range(n):
        k = 0 if i > right else min(even[left + right - i + 1], right - i + 1)
        while i - k - 1 >= 0 and i + k < n and ids[i - k - 1] == ids[i + k]:
            k += 1
        even[i] = k
        if i + k - 1 > right:
            left, right = i - k, i + k - 1
    by_start: list[list[int]] = [[] for _ in range(n)]
    for c in range(n):
        for rad in range(1, odd[c] + 1):
            by_start[c - rad + 1].append(c + rad - 1)
    for c in range(n):
        for rad in range(1, even[c] + 1):
            by_start[c - rad].append(c + rad - 1)
    for lst in by_start:
        lst.sort()
    return by_start


def _suffix_automaton(ids: tuple[int, ...]):
    """Suffix automaton over the word; returns (lengths, links, first_end)
    where first_end[s] is the 0-based end index of the earliest occurrence of
    the factors the state represents."""
    sa_len = [0]
    sa_link = [-1]
    sa_next: list[dict[int, int]] = [{}]
    sa_first = [-1]
    last = 0
    for i, c in enumerate(ids):
        cur = len(sa_len)
        sa_len.append(sa_len[last] + 1)
        sa_link.append(-1)
        sa_next.append({})
        sa_first.append(i)
        p = last
        while p != -1 and c not in sa_next[p]:
            sa_next[p][c] = cur
            p = sa_link[p]
        if p == -1:
            sa_link[cur] = 0
        else:
            q = sa_next[p][c]
            if sa_len[p] + 1 == sa_len[q]:
                sa_link[cur] = q
            else:
                clone = len(sa_len)
                sa_len.append(sa_len[p] + 1)
                sa_link.append(sa_link[q])
                sa_next.append(dict(sa_next[q]))
                sa_first.append(sa_first[q])
                while p != -1 and sa_next[p].get(c) == q:
                    sa_next[p][c] = clone
                    p = sa_link[p]
                sa_link[q] = clone
                sa_link[cur] = clone
        last = cur
    return sa_len, sa_link, sa_first


def scan_omega(
    w: Word,
    k: int,
    strict: bool = False,
    max_length: int | None = None,
) -> OmegaReport:
    """Scan every distinct factor of w and report the members.

    Factors are deduplicated by content (suffix automaton); the reported
    occurrence is the earliest one.  Members come out sorted by (length,
    content) regardless of evaluation order, so parallel evaluation cannot
    change the report.

    The threshold is meaningful when k bounds the palindromic length of
    every factor; for words up to length 200 the report records whether
    that holds, so callers can flag the caveat.
    """
    if k < 1:
        raise PreconditionError("k must be positive")
    n = len(w)
    if max_length is not None and n > max_length:
        raise ResourceLimitError(f"scan length {n} exceeds cap {max_length}")
    ids = w.ids
    if n == 0:
        return OmegaReport(
            k=k, scanned_prefix_length=0, strict=strict, members=[],
            k_covers_factor_pl=True,
        )
    by_start = _pal_ends_by_start(ids)
    sa_len, sa_link, sa_first = _suffix_automaton(ids)

    def eval_states(states) -> list[tuple[int, tuple[int, ...], int, int, int]]:
        rows = []
        for s in states:
            hi = sa_len[s]
            lo = sa_len[sa_link[s]] + 1
            end = sa_first[s]
            ends_here = by_start
            for length in range(lo, hi + 1):
                start = end - length + 1
                cnt = bisect_right(ends_here[start], end)
                if _meets_threshold(cnt + 1, length, k, strict):
                    rows.append((length, ids[start : end + 1], start, end, cnt))
        return rows

    rows = runtime.map_chunks(eval_states, range(1, len(sa_len)))
    rows.sort(key=lambda r: (r[0], r[1]))
    members = [
        OmegaMember(
            start=start + 1,
            end=end + 1,
            length=length,
            count_with_eps=cnt + 1,
            count_without_eps=cnt,
            threshold_num=length,
            threshold_den_power=k,
        )
        for length, _, start, end, cnt in rows
    ]
    covers = None
    if n <= 200:
        covers = _max_factor_pl(w) <= k
    return OmegaReport(
        k=k,
        scanned_prefix_length=n,
        strict=strict,
        members=members,
        k_covers_factor_pl=covers,
    )


def _max_factor_pl(w: Word) -> int:
    # every factor is a prefix of some suffix, so suffix profiles cover all
    from .palen import pl_profile_fast

    top = 0
    for i in range(len(w)):
        suffix_max = max(pl_profile_fast(w[i:]).pl)
        if suffix_max > top:
            top = suffix_max
    return top


@dataclass(frozen=True)
class PeriodicPalPrefix:
    """A periodic palindromic prefix (ab)^exponent a of a host factor, with
    a possibly empty and b nonempty, both palindromes."""

    a: Word
    b: Word
    exponent: int
    host: Word
    host_start: int
    host_end: int

    @property
    def period(self) -> int:
        return len(self.a) + len(self.b)


def _find_close_pair(mu: list[int], j: int) -> int | None:
    """First index with mu[idx+1] / mu[idx] <= 1 + 1/j, compared exactly."""
    for idx in range(len(mu) - 1):
        if mu[idx + 1] * j <= mu[idx] * (j + 1):
            return idx
    return None


def _witness_from_pair(
    t: Word,
    mu: list[int],
    idx: int,
    j: int,
    host_start: int,
    host_end: int,
) -> PeriodicPalPrefix:
    v = t[: mu[idx + 1]]
    u = t[: mu[idx]]
    period = period_from_palindromic_affix(v, u)
    dec = decompose_periodic_palindrome(v, period)
    exponent = dec.exponent_k
    ab = dec.a + dec.b
    if exponent < j or not (ab * exponent).is_prefix_of(t):
        raise FalsificationError(
            "close palindromic prefixes did not yield exponent >= j",
            {"factor": t.text(), "j": j, "exponent": exponent},
        )
    return PeriodicPalPrefix(
        a=dec.a,
        b=dec.b,
        exponent=exponent,
        host=t,
        host_start=host_start,
        host_end=host_end,
    )


def extract_periodic_prefix(
    t: Word,
    j: int,
    host_start: int = 1,
    host_end: int | None = None,
) -> PeriodicPalPrefix | None:
    """Find a periodic palindromic prefix of t with exponent at least j.

    Looks for consecutive nonempty palindromic prefix lengths whose ratio is
    at most 1 + 1/j (checked exactly as mu2 * j <= mu1 * (j+1)); the longer
    prefix is then periodic with period equal to the difference and splits as
    (ab)^e a with e >= j.  Returns None when no such pair exists.
    """
    if j < 1:
        raise PreconditionError("j must be positive")
    if host_end is None:
        host_end = host_start + len(t) - 1
    mu = palindromic_prefixes(t)[1:]
    idx = _find_close_pair(mu, j)
    if idx is None:
        return None
    return _witness_from_pair(t, mu, idx, j, host_start, host_end)


def hunt_periodic_palindromes(
    w: Word,
    k: int,
    j: int,
    strict: bool = False,
    max_length: int | None = None,
) -> PeriodicPalPrefix | None:
    """Scan w, then try the constructive extraction on every member in
    decreasing palindromic-prefix-count order; the first hit wins.

    For j = 1 any single letter already gives (ab)^1 with a empty, so a
    degenerate witness is returned when the ratio search finds nothing.
    """
    report = scan_omega(w, k, strict=strict, max_length=max_length)
    # start is the earliest occurrence, so (-count, length, start) is a
    # deterministic order without materializing member contents
    order = sorted(
        report.members, key=lambda m: (-m.count_with_eps, m.length, m.start)
    )
    # palindromic prefixes of w[s..e] are palindromic occurrences at start s
    # ending by e, so one Manacher pass serves every member
    by_start = _pal_ends_by_start(w.ids) if order else []
    for member in order:
        start0 = member.start - 1
        ends = by_start[start0]
        mu = [
            ends[i] - start0 + 1
            for i in range(bisect_right(ends, member.end - 1))
        ]
        idx = _find_close_pair(mu, j)
        if idx is not None:
            return _witness_from_pair(
                w[start0 : member.end],
                mu,
                idx,
                j,
                host_start=member.start,
                host_end=member.end,
            )
    if j == 1 and len(w) >= 1:
        letter = w[:1]
        return PeriodicPalPrefix(
            a=Word((), w.alphabet),
            b=letter,
            exponent=1,
            host=letter,
            host_start=1,
            host_end=1,
        )
    return None
