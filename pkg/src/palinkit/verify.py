"""Named exhaustive verification suites.

Each suite walks a bounded corpus, stops at the first counterexample, and
returns a SuiteResult whose failures list carries the serialized inputs.
No failures are expected; the machinery exists so a falsification could
actually be reported instead of crashing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from . import delta as delta_mod
from .errors import FalsificationError, PreconditionError, ResourceLimitError
from .palen import mpf_enumerate, pl_oracle, pl_oracle_prefixes, pl_profile_fast
from .words import Alphabet, Word

SUITES = (
    "concat-inequalities",
    "mpf-infix",
    "lemma-dvd",
    "lemma-central",
    "main-theorem",
    "oracle-equivalence",
)

MAX_EXHAUSTIVE_LEN = 18
MAX_SPLIT_LEN = 14
MAX_DELTA_D = 6
MAX_DELTA_V = 4
MAX_DELTA_SLACK = 4


@dataclass
class SuiteResult:
    suite: str
    cases: int
    failures: list[dict] = field(default_factory=list)
    records: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _binary_words(max_len: int, min_len: int = 1):
    alphabet = Alphabet(("0", "1"))
    for length in range(min_len, max_len + 1):
        for tup in product((0, 1), repeat=length):
            yield Word(tup, alphabet)


def concat_inequalities_suite(max_len: int = 12) -> SuiteResult:
    """All binary words up to max_len, all split points w = xy:
    PL(xy) <= PL(x) + PL(y), both triangle bounds, |PL(xy) - PL(x)| <= 1 when
    y is a palindrome, and |PL(x) - PL(y)| <= 1 when xy is a palindrome."""
    if max_len > MAX_SPLIT_LEN:
        raise ResourceLimitError(f"max_len {max_len} exceeds cap {MAX_SPLIT_LEN}")
    result = SuiteResult(suite="concat-inequalities", cases=0)
    for w in _binary_words(max_len):
        ids = w.ids
        n = len(ids)
        pl_pref = pl_oracle_prefixes(w)
        pl_suf = pl_oracle_prefixes(Word(ids[::-1], w.alphabet))
        whole_pal = ids == ids[::-1]
        pl_w = pl_pref[n]
        for i in range(n + 1):
            px = pl_pref[i]
            py = pl_suf[n - i]
            result.cases += 1
            ok = pl_w <= px + py and py <= px + pl_w and px <= py + pl_w
            if ok:
                tail = ids[i:]
                if tail == tail[::-1] and abs(pl_w - px) > 1:
                    ok = False
                if whole_pal and abs(px - py) > 1:
                    ok = False
            if not ok:
                result.failures.append(
                    {"word": w.text(), "split": i, "pl_x": px, "pl_y": py, "pl_xy": pl_w}
                )
                return result
    return result


def mpf_infix_suite(max_len: int = 12) -> SuiteResult:
    """All binary words up to max_len: every run t_i..t_j of every minimal
    palindromic factorization has palindromic length j - i + 1."""
    if max_len > MAX_SPLIT_LEN:
        raise ResourceLimitError(f"max_len {max_len} exceeds cap {MAX_SPLIT_LEN}")
    result = SuiteResult(suite="mpf-infix", cases=0)
    memo: dict[tuple[int, ...], int] = {}

    def pl_of(word: Word) -> int:
        got = memo.get(word.ids)
        if got is None:
            got = pl_oracle(word)
            memo[word.ids] = got
        return got

    for w in _binary_words(max_len):
        for fact in mpf_enumerate(w):
            bounds = [0]
            for part in fact.parts:
                bounds.append(bounds[-1] + len(part))
            k = len(fact.parts)
            for i in range(k):
                for j in range(i, k):
                    result.cases += 1
                    run = w[bounds[i] : bounds[j + 1]]
                    if pl_of(run) != j - i + 1:
                        result.failures.append(
                            {
                                "word": w.text(),
                                "factorization": fact.render(),
                                "i": i + 1,
                                "j": j + 1,
                                "pl_run": pl_of(run),
                            }
                        )
                        return result
    return result


def _delta_caps_guard(alphabet_size: int, max_d: int, max_v: int, n_slack: int) -> None:
    if max_d > MAX_DELTA_D or max_v > MAX_DELTA_V or n_slack > MAX_DELTA_SLACK:
        raise ResourceLimitError(
            f"delta caps ({max_d},{max_v},{n_slack}) exceed "
            f"({MAX_DELTA_D},{MAX_DELTA_V},{MAX_DELTA_SLACK})"
        )
    if alphabet_size > 3:
        raise ResourceLimitError("delta suites support alphabets of size 2 or 3")


def delta_suite(
    checks: tuple[str, ...],
    alphabet_size: int = 2,
    max_d: int = 4,
    max_v: int = 3,
    n_slack: int = 2,
) -> SuiteResult:
    """Run the selected checks (dvd, central, theorem) over every enumerated
    quadruple; records one report row per quadruple."""
    _delta_caps_guard(alphabet_size, max_d, max_v, n_slack)
    name = "+".join(checks)
    result = SuiteResult(suite=name, cases=0)
    for quad in delta_mod.delta_enumerate(alphabet_size, max_d, max_v, n_slack):
        result.cases += 1
        row = quad.as_dict()
        ok = True
        if "dvd" in checks:
            row["dvd_factor_ok"] = delta_mod.check_dvd_factor(quad)
            ok = ok and row["dvd_factor_ok"]
        if "central" in checks:
            try:
                delta_mod.find_central_palindrome(quad)
                row["central_witness_ok"] = True
            except FalsificationError as exc:
                row["central_witness_ok"] = False
                row["detail"] = exc.payload
                ok = False
        if "theorem" in checks:
            theorem = delta_mod.check_main_theorem(quad)
            row["pl_u"] = theorem.pl_u
            row["pl_w"] = theorem.pl_w
            row["theorem_ok"] = theorem.holds
            ok = ok and theorem.holds
        result.records.append(row)
        if not ok:
            result.failures.append(row)
            return result
    return result


def oracle_equivalence_suite(
    max_len: int = 12,
    random_words: int = 0,
    random_len: int = 0,
    seed: int = 0,
) -> SuiteResult:
    """Fast per-prefix palindromic lengths against the reference oracle:
    exhaustively on binary words up to max_len, then on random words over
    alphabets of size 2..4."""
    if max_len > MAX_EXHAUSTIVE_LEN:
        raise ResourceLimitError(f"max_len {max_len} exceeds cap {MAX_EXHAUSTIVE_LEN}")
    result = SuiteResult(suite="oracle-equivalence", cases=0)
    for w in _binary_words(max_len):
        result.cases += 1
        if pl_profile_fast(w).pl != pl_oracle_prefixes(w):
            result.failures.append({"word": w.text()})
            return result
    rng = random.Random(seed)
    for idx in range(random_words):
        sigma = 2 + idx % 3
        alphabet = Alphabet.letters(sigma)
        w = Word(tuple(rng.randrange(sigma) for _ in range(random_len)), alphabet)
        result.cases += 1
        if pl_profile_fast(w).pl != pl_oracle_prefixes(w):
            result.failures.append({"random_index": idx, "sigma": sigma, "seed": seed})
            return result
    return result


def run_suite(
    name: str,
    max_len: int | None = None,
    alphabet_size: int = 2,
    max_d: int = 4,
    max_v: int = 3,
    n_slack: int = 2,
    random_words: int = 0,
    random_len: int = 0,
    seed: int = 0,
) -> SuiteResult:
    """Dispatch a suite by its command-line name."""
    if name == "concat-inequalities":
        return concat_inequalities_suite(max_len if max_len is not None else 12)
    if name == "mpf-infix":
        return mpf_infix_suite(max_len if max_len is not None else 12)
    if name == "lemma-dvd":
        return delta_suite(("dvd",), alphabet_size, max_d, max_v, n_slack)
    if name == "lemma-central":
        return delta_suite(("central",), alphabet_size, max_d, max_v, n_slack)
    if name == "main-theorem":
        return delta_suite(("theorem",), alphabet_size, max_d, max_v, n_slack)
    if name == "oracle-equivalence":
        return oracle_equivalence_suite(
            max_len if max_len is not None else 12, random_words, random_len, seed
        )
    raise PreconditionError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
