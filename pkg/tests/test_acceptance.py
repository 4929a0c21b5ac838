"""Acceptance suite: one test per criterion, one printed pass/fail line per
criterion (run with -s to see them).  Tolerances are pinned here: almost all
checks are exact integer or exact rational equalities with zero tolerance;
the two numeric checks (dominant-root separation, boundary scans) state their
bounds inline."""

import time

import pytest

from dynaffine import suites
from dynaffine.suites import (
    SuiteResult,
    check_certificates,
    check_closed_forms,
    check_recurrence_dichotomy,
    suite_boundary,
    suite_euler_product,
    suite_example_5_8,
    suite_filtration,
    suite_growth,
    suite_key_lemma,
    suite_lte,
    suite_salem_h4,
    suite_tame_identity,
)


def _report(criterion: str, res: SuiteResult, budget: float | None = None):
    ok = res.ok and (budget is None or res.elapsed <= budget)
    status = "PASS" if ok else "FAIL"
    extra = f" ({res.elapsed:.1f}s" + (f" < {budget:.0f}s budget)" if budget else ")")
    print(f"ACCEPTANCE {criterion}: {status}{extra}")
    if not res.ok:
        for line in res.lines:
            if line.startswith("FAIL"):
                print("   ", line)
    assert res.ok, f"{criterion}: failing checks\n" + "\n".join(
        l for l in res.lines if l.startswith("FAIL")
    )
    if budget is not None:
        assert res.elapsed <= budget, f"{criterion}: {res.elapsed:.1f}s over budget {budget}s"


def test_c01_02_03_key_lemma_oracle_equivalence():
    # criteria 1-3: formula == brute force, exact integer equality, < 60 s
    res = suite_key_lemma()
    _report("1-3 (key-lemma oracle equivalence)", res, budget=60.0)


def test_c04_tame_closed_forms():
    # 30 exact rational coefficients per descriptor, zero tolerance, < 30 s
    res = check_closed_forms(T=30)
    _report("4 (tame closed forms)", res, budget=30.0)


def test_c05_root_rationality_certificates():
    res = check_certificates()
    _report("5 (root-rationality certificates)", res)


def test_c06_non_recurrence_witness():
    res = check_recurrence_dichotomy()
    _report("6 (recurrence dichotomy)", res)


@pytest.mark.xfail(
    strict=True,
    reason="spec defect: power(4,13) has its first 13-adic deviation at "
    "n = 78 > 60, so the window-60 counts genuinely satisfy an order-12 "
    "recurrence; the refusal reappears at window 170 (see decisions ledger)",
)
def test_c06_literal_refusal_at_window_60():
    assert suites.recurrence_refusal_at_60_everywhere()


def test_c07_example_5_8():
    res = suite_example_5_8()
    _report("7 (vector-group example degrees + H-series identity)", res)


def test_c08_tame_full_identities_and_pair_ode():
    res = suite_tame_identity(T=30)
    _report("8 (tame/full identities, pair ODE, sensitivity)", res)


def test_c09_euler_product_and_union():
    res = suite_euler_product(field_limit=2401, n_max=12)
    _report("9 (finite-level Euler product + union assembly)", res)


def test_c10_valuations_filtration_salem():
    res_lte = suite_lte(trials=1000, seed=42)
    res_filt = suite_filtration()
    res_salem = suite_salem_h4()
    merged = SuiteResult(
        name="valuations",
        ok=res_lte.ok and res_filt.ok and res_salem.ok,
        lines=res_lte.lines + res_filt.lines + res_salem.lines,
        elapsed=res_lte.elapsed + res_filt.elapsed + res_salem.elapsed,
    )
    _report("10 (LTE, filtration lemmas, Salem H4 failure)", merged)


def test_c11_growth_bounds():
    res = suite_growth()
    _report("11 (growth bounds)", res)


@pytest.mark.xfail(
    strict=True,
    reason="spec defect: for the five cells with m = +-1 mod p the p-adic "
    "correction applies to every n, so f_n^(1/n) first enters the 5% band at "
    "n between 11 and 32, not by n = 10 (see decisions ledger)",
)
def test_c11_literal_witness_by_ten():
    assert suites.growth_witness_by_10_everywhere()


def test_c12_boundary_scans():
    t0 = time.time()
    res = suite_boundary()
    _report("12 (boundary radial scans)", res, budget=5.0)
    assert time.time() - t0 < 5.0


@pytest.mark.xfail(
    strict=True,
    reason="spec defect: at k = 2 the singular level engages only for "
    "lambda^(p^2) near 1, so the coarse lambda grid is not monotone for "
    "p in {5, 7}; the spec's own examples claim k = 2 only for p = 3 "
    "(see decisions ledger)",
)
def test_c12_literal_k2_monotonicity_large_p():
    assert suites.boundary_k2_large_p_decrease()
