"""Palindromic length PL(w): the minimal number of palindromes whose
concatenation equals w, with PL of the empty word defined as 0.

Two independent routes are provided and kept separate on purpose:

* ``pl_oracle`` is the reference: palindromic suffixes are found by plain
  center expansion and fed into the textbook DP, quadratic in the worst case.
* ``pl_profile_fast`` runs the eertree series-link recurrence, computing the
  palindromic length of every prefix in O(n log n) total.

``mpf_enumerate`` lists every minimal palindromic factorization, and the
``check_*`` predicates expose the concatenation inequalities as testable
booleans.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .eertree import Eertree
from .errors import PreconditionError, ResourceLimitError
from .words import Word, is_palindrome

MPF_UNBOUNDED_MAX = 100_000


def _pal_suffix_lengths_by_end(ids: tuple[int, ...]) -> list[list[int]]:
    """For each end position e (1-based), the lengths of all palindromic
    suffixes of the length-e prefix.  Plain center expansion; no eertree."""
    n = len(ids)
    by_end: list[list[int]] = [[] for _ in range(n + 1)]
    for c in range(n):
        left, right = c, c
        while left >= 0 and right < n and ids[left] == ids[right]:
            by_end[right + 1].append(right - left + 1)
            left -= 1
            right += 1
    for c in range(n - 1):
        left, right = c, c + 1
        while left >= 0 and right < n and ids[left] == ids[right]:
            by_end[right + 1].append(right - left + 1)
            left -= 1
            right += 1
    return by_end


def pl_oracle_prefixes(w: Word) -> list[int]:
    """Reference palindromic lengths of every prefix, entry i for length i."""
    ids = w.ids
    n = len(ids)
    by_end = _pal_suffix_lengths_by_end(ids)
    inf = n + 1
    dp = [0] * (n + 1)
    for e in range(1, n + 1):
        best = inf
        for ell in by_end[e]:
            v = dp[e - ell]
            if v < best:
                best = v
        dp[e] = best + 1
    return dp


def pl_oracle(w: Word) -> int:
    """Reference PL(w); PL of the empty word is 0."""
    return pl_oracle_prefixes(w)[-1]


@dataclass
class PLProfile:
    """Per-prefix palindromic lengths plus the eertree that produced them.

    ``pl[i]`` is the palindromic length of the length-i prefix.  Backpointers
    (the palindromic-suffix lengths achieving each minimum) are derived on
    demand from the tree snapshots rather than stored eagerly.
    """

    word: Word
    pl: list[int]
    tree: Eertree = field(repr=False)

    @property
    def final(self) -> int:
        return self.pl[-1]

    def backpointers(self, i: int) -> list[int]:
        """Palindromic-suffix lengths ell of the length-i prefix achieving
        pl[i] = pl[i-ell] + 1, ascending."""
        if i <= 0:
            return []
        pl = self.pl
        target = pl[i] - 1
        return [
            ell
            for ell in self.tree.pal_suffix_lengths_at(i)
            if pl[i - ell] == target
        ]


def _profile_dense(w: Word, tree: Eertree) -> list[int]:
    # Inlined copy of Eertree.append for dense alphabets: the tree grows one
    # node per new palindrome, so per-step allocation and call overhead
    # dominate the 10^6-symbol benchmark.  Writes into the tree's own lists;
    # must mirror Eertree.append exactly.
    ids = w.ids
    n = len(ids)
    sigma = tree._sigma
    lens = tree._len
    sufs = tree._suf
    diffs = tree._diff
    series = tree._series
    trans = tree._trans
    first_end = tree._first_end
    snap = tree._last_per_pos
    blank = (-1,) * sigma
    last = tree._last
    inf = n + 1
    dp = [0] * (n + 1)
    g = [0, 0]
    lens_append = lens.append
    sufs_append = sufs.append
    diffs_append = diffs.append
    series_append = series.append
    first_end_append = first_end.append
    trans_extend = trans.extend
    g_append = g.append
    snap_append = snap.append
    for pos in range(n):
        c = ids[pos]
        v = last
        while True:
            k = pos - lens[v] - 1
            if k >= 0 and ids[k] == c:
                break
            v = sufs[v]
        slot = v * sigma + c
        t = trans[slot]
        if t != -1:
            last = t
        else:
            m = len(lens)
            new_len = lens[v] + 2
            if new_len == 1:
                sl = 1
            else:
                u = sufs[v]
                while True:
                    k = pos - lens[u] - 1
                    if k >= 0 and ids[k] == c:
                        break
                    u = sufs[u]
                sl = trans[u * sigma + c]
            lens_append(new_len)
            sufs_append(sl)
            d = new_len - lens[sl]
            diffs_append(d)
            series_append(sl if d != diffs[sl] else series[sl])
            first_end_append(pos + 1)
            trans_extend(blank)
            trans[slot] = m
            g_append(0)
            last = m
        snap_append(last)
        v = last
        i = pos + 1
        best = inf
        while lens[v] > 0:
            sl = series[v]
            val = dp[i - lens[sl] - diffs[v]]
            sv = sufs[v]
            if diffs[v] == diffs[sv]:
                gv = g[sv]
                if gv < val:
                    val = gv
            g[v] = val
            if val < best:
                best = val
            v = sl
        dp[i] = best + 1
    tree._word.extend(ids)
    tree._last = last
    return dp


def _profile_generic(w: Word, tree: Eertree) -> list[int]:
    ids = w.ids
    n = len(ids)
    append = tree.append
    lens = tree._len
    sufs = tree._suf
    diffs = tree._diff
    series = tree._series
    inf = n + 1
    dp = [0] * (n + 1)
    g = [0, 0]
    for i in range(1, n + 1):
        v = append(ids[i - 1])
        if len(g) < len(lens):
            g.append(0)
        best = inf
        while lens[v] > 0:
            sl = series[v]
            val = dp[i - lens[sl] - diffs[v]]
            sv = sufs[v]
            if diffs[v] == diffs[sv]:
                gv = g[sv]
                if gv < val:
                    val = gv
            g[v] = val
            if val < best:
                best = val
            v = sl
        dp[i] = best + 1
    return dp


def pl_profile_fast(w: Word) -> PLProfile:
    """Palindromic length of every prefix via eertree series links.

    For each position the palindromic suffixes group into logarithmically
    many arithmetic series by period; one memoized minimum per series makes
    the step cost O(log i).
    """
    tree = Eertree(w.alphabet)
    if tree._dense:
        dp = _profile_dense(w, tree)
    else:
        dp = _profile_generic(w, tree)
    return PLProfile(word=w, pl=dp, tree=tree)


@dataclass(frozen=True)
class Factorization:
    """A tuple of nonempty palindromes concatenating to the factorized word."""

    parts: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def word(self) -> Word:
        out = self.parts[0]
        for p in self.parts[1:]:
            out = out + p
        return out

    def render(self) -> str:
        return "".join(f"({p.text()})" for p in self.parts)


def mpf_enumerate(w: Word, limit: int | None = None) -> list[Factorization]:
    """All minimal palindromic factorizations of w.

    Depth-first over backpointers, choosing the shortest last part first at
    every branch, so the output order follows the part-length sequence read
    from the end of the word.  Words longer than 100k symbols are rejected
    unless a limit bounds the potentially exponential output.
    """
    n = len(w)
    if n == 0:
        raise PreconditionError("mpf_enumerate requires a nonempty word")
    if n > MPF_UNBOUNDED_MAX and limit is None:
        raise ResourceLimitError(
            f"word of length {n} needs an explicit limit for MPF enumeration"
        )
    profile = pl_profile_fast(w)
    pl = profile.pl
    tree = profile.tree

    cand_cache: dict[int, list[int]] = {}

    def candidates(e: int) -> list[int]:
        got = cand_cache.get(e)
        if got is None:
            target = pl[e] - 1
            got = [
                ell
                for ell in tree.pal_suffix_lengths_at(e)
                if pl[e - ell] == target
            ]
            cand_cache[e] = got
        return got

    results: list[Factorization] = []
    # Explicit stack: one frame per suffix still to factorize; chosen[k] is
    # the part length taken to enter frame k+1 (counted from the word end).
    stack: list[list] = [[n, candidates(n), 0]]
    chosen: list[int] = []
    while stack:
        frame = stack[-1]
        e, cands, idx = frame
        if idx >= len(cands):
            stack.pop()
            if chosen:
                chosen.pop()
            continue
        frame[2] = idx + 1
        ell = cands[idx]
        rest = e - ell
        if rest == 0:
            chosen.append(ell)
            parts = []
            pos = n
            for length in chosen:
                parts.append(w[pos - length : pos])
                pos -= length
            parts.reverse()
            results.append(Factorization(tuple(parts)))
            chosen.pop()
            if limit is not None and len(results) >= limit:
                return results
        else:
            chosen.append(ell)
            stack.append([rest, candidates(rest), 0])
    return results


def check_subadditivity(x: Word, y: Word) -> bool:
    """PL(xy) <= PL(x) + PL(y)."""
    return pl_oracle(x + y) <= pl_oracle(x) + pl_oracle(y)


def check_triangle(x: Word, y: Word) -> bool:
    """PL(y) <= PL(x) + PL(xy) and PL(x) <= PL(y) + PL(xy)."""
    px, py, pxy = pl_oracle(x), pl_oracle(y), pl_oracle(x + y)
    return py <= px + pxy and px <= py + pxy


def check_palindrome_append(x: Word, y: Word) -> bool:
    """|PL(xy) - PL(x)| <= 1 when y is a palindrome, and |PL(x) - PL(y)| <= 1
    when xy is a palindrome; vacuously true when neither applies."""
    ok = True
    if is_palindrome(y):
        ok = ok and abs(pl_oracle(x + y) - pl_oracle(x)) <= 1
    if is_palindrome(x + y):
        ok = ok and abs(pl_oracle(x) - pl_oracle(y)) <= 1
    return ok


def check_mpf_infix(w: Word) -> bool:
    """Every run t_i..t_j of every minimal palindromic factorization has
    palindromic length exactly j - i + 1."""
    if len(w) == 0:
        raise PreconditionError("check_mpf_infix requires a nonempty word")
    memo: dict[tuple[int, ...], int] = {}

    def pl_of(word: Word) -> int:
        got = memo.get(word.ids)
        if got is None:
            got = pl_oracle(word)
            memo[word.ids] = got
        return got

    for fact in mpf_enumerate(w):
        parts = fact.parts
        k = len(parts)
        bounds = [0]
        for p in parts:
            bounds.append(bounds[-1] + len(p))
        for i in range(k):
            for j in range(i, k):
                run = w[bounds[i] : bounds[j + 1]]
                if pl_of(run) != j - i + 1:
                    return False
    return True
