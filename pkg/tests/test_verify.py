import pytest

from palinkit import PreconditionError, ResourceLimitError
from palinkit.verify import (
    SUITES,
    concat_inequalities_suite,
    delta_suite,
    mpf_infix_suite,
    oracle_equivalence_suite,
    run_suite,
)


def test_suite_names_dispatch():
    for name in SUITES:
        if name.startswith("lemma") or name == "main-theorem":
            result = run_suite(name, max_d=2, max_v=1, n_slack=0)
        else:
            result = run_suite(name, max_len=5)
        assert result.cases > 0


def test_unknown_suite():
    with pytest.raises(PreconditionError):
        run_suite("nope")


def test_concat_inequalities_small():
    result = concat_inequalities_suite(max_len=9)
    assert result.passed and result.cases == sum(2**n * (n + 1) for n in range(1, 10))


def test_mpf_infix_small():
    result = mpf_infix_suite(max_len=8)
    assert result.passed and result.cases > 0


def test_oracle_equivalence_with_randoms():
    result = oracle_equivalence_suite(max_len=8, random_words=20, random_len=300, seed=7)
    assert result.passed
    assert result.cases == (2**9 - 2) + 20


def test_oracle_equivalence_deterministic_under_seed():
    a = oracle_equivalence_suite(max_len=4, random_words=5, random_len=50, seed=3)
    b = oracle_equivalence_suite(max_len=4, random_words=5, random_len=50, seed=3)
    assert (a.cases, a.failures) == (b.cases, b.failures)


def test_delta_suite_records():
    result = delta_suite(("dvd", "theorem"), 2, 2, 1, 0)
    assert result.passed
    assert all(r["dvd_factor_ok"] and r["theorem_ok"] for r in result.records)


def test_delta_suite_reports_central_counterexample():
    # the central-witness lemma is genuinely falsified at these caps; the
    # suite must stop with the offending quadruple serialized
    result = delta_suite(("central",), 2, 4, 3, 2)
    assert not result.passed
    assert result.failures[0]["central_witness_ok"] is False
    assert {"u", "v", "d", "n"} <= set(result.failures[0])


def test_resource_caps():
    with pytest.raises(ResourceLimitError):
        concat_inequalities_suite(max_len=15)
    with pytest.raises(ResourceLimitError):
        oracle_equivalence_suite(max_len=19)
    with pytest.raises(ResourceLimitError):
        delta_suite(("dvd",), 2, 7, 3, 2)


def test_failure_path_wiring(monkeypatch):
    # force a miscomputed palindromic length to prove failures are caught
    import palinkit.verify as verify_mod

    real = verify_mod.pl_oracle_prefixes

    def broken(word):
        out = real(word)
        if len(out) == 4:  # sabotage every length-3 word
            out = out[:-1] + [out[-1] + 1]
        return out

    monkeypatch.setattr(verify_mod, "pl_oracle_prefixes", broken)
    result = verify_mod.oracle_equivalence_suite(max_len=3)
    assert not result.passed and result.failures
