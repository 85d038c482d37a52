import json

import pytest

from balanced_pairing import identity_suite as suite
from balanced_pairing.modular_core import prime_context, primes_between
from balanced_pairing.report import CheckReport

ONE_MOD_FOUR = [p for p in primes_between(5, 300) if p % 4 == 1]


def brute_square_product(p, keep):
    h = (p - 1) // 2
    prod = 1
    for i in range(1, h + 1):
        for j in range(i + 1, h + 1):
            if keep(i, j):
                prod = prod * (j * j - i * i) % p
    return prod % p


def brute_quartic_product(p, g):
    k = (p - 1) // 4
    q = [pow(g, 4 * r, p) for r in range(1, k + 1)]
    prod = 1
    for u in q:
        for v in q:
            if u != v:
                prod = prod * (u - v) % p
    return prod


def test_product_helpers_match_loops():
    for p in [5, 7, 13, 17, 29, 43, 61]:
        assert suite.square_difference_product(p) == brute_square_product(p, lambda i, j: True)
        assert suite.square_difference_product(p, True) == brute_square_product(
            p, lambda i, j: (i * i + j * j) % p)
        assert suite.sum_zero_product(p) == brute_square_product(p, lambda i, j: (i * i + j * j) % p == 0)
        if p % 4 == 1:
            assert suite.quartic_difference_product(p, prime_context(p).g) == brute_quartic_product(
                p, prime_context(p).g)


def test_half_square_product_examples():
    assert suite.square_difference_product(13) == 8
    assert suite.square_difference_product(7) == 1
    assert suite.square_difference_product(5) == 3


def test_partner_product_examples():
    r = suite.check_partner_products(13)
    assert r.passed and r.lhs == (8, 8, 1)
    r = suite.check_partner_products(5)
    assert r.passed and r.lhs[0] == 3


def test_quartic_difference_examples():
    assert suite.check_quartic_difference(13, 2).lhs == 1
    assert suite.check_quartic_difference(17, 3).lhs == 16
    assert suite.check_quartic_difference(5, 2).lhs == 1


def test_parity_linkage_examples():
    r = suite.check_parity_linkage(13, 1)
    assert r.passed and (r.lhs, r.rhs) == (1, 1)
    r = suite.check_parity_linkage(29, 1)
    assert r.passed and r.rhs == 1
    assert suite.check_parity_linkage(5, 1).lhs == 0


def test_sums_examples():
    assert suite.check_partner_sums(29).lhs == (105, 210, 1)
    assert suite.check_partner_sums(13).lhs == (21, 42, 1)
    assert suite.check_partner_sums(5).lhs == (3, 6, 1)


def test_inversion_structure_examples():
    assert suite.check_inversion_structure(13).lhs == (1, 2, 9, 3, 9, 1, 1)
    assert suite.check_inversion_structure(29).lhs == (7, 14, 49, 7, 49, 7, 7)
    assert suite.check_inversion_structure(5).lhs == (0, 0, 1, 1, 1, 0, 0)


def test_gauss_inversion_examples():
    r = suite.check_gauss_inversion(5, 13)
    assert r.passed and (r.lhs, r.rhs) == (9, 9)
    r = suite.check_gauss_inversion(2, 13)
    assert r.passed and r.lhs == 9
    assert suite.check_gauss_inversion(1, 29).lhs == 0
    assert suite.check_gauss_inversion(2, 15).note.startswith("composite")
    with pytest.raises(ValueError):
        suite.check_gauss_inversion(3, 15)


def test_sun_parity_examples():
    assert suite.check_sun_parity(13, 1).lhs == 1
    r = suite.check_sun_parity(7, 1)
    assert r.passed and (r.lhs, r.rhs) == (1, 1)
    r = suite.check_sun_parity(3, 1)
    assert r.passed and (r.lhs, r.rhs) == (0, 0)


@pytest.mark.parametrize("p", ONE_MOD_FOUR)
def test_every_check_passes(p):
    reports = suite.run_checks(p, suite.CHECKS, (1, 2, 3, 5))
    assert reports and all(r.passed for r in reports), [r.to_human() for r in reports if not r.passed]


@pytest.mark.parametrize("p", [3, 7, 11, 19, 23, 31, 43])
def test_three_mod_four_checks(p):
    reports = suite.run_checks(p, suite.CHECKS)
    ids = {r.check_id for r in reports}
    assert ids <= {"sun_parity", "gauss_scan", "half_square_product", "gauss_inversion"}
    assert "sun_parity" in ids
    assert all(r.passed for r in reports)


def test_quartic_difference_runs_two_roots():
    reports = suite.run_checks(13, ["quartic_difference"])
    assert [r.params["g"] for r in reports] == [2, 6]


def test_corrupted_half_factorial_is_detected(monkeypatch):
    from balanced_pairing import modular_core

    modular_core.prime_context.cache_clear()
    real = modular_core.half_factorial_t
    monkeypatch.setattr(modular_core, "half_factorial_t", lambda p: real(p) + 1)
    try:
        failed = {r.check_id for r in suite.run_checks(13, suite.CHECKS) if not r.passed}
    finally:
        modular_core.prime_context.cache_clear()
    assert {"balanced", "partner_difference", "half_square_product"} <= failed


def test_report_serialization():
    r = CheckReport("balanced", {"p": 29}, True, (7, 7, 7), (7, 7, 7))
    d = json.loads(r.to_json())
    assert d == {"check": "balanced", "p": "29", "passed": True, "lhs": ["7", "7", "7"], "rhs": ["7", "7", "7"]}
    row = r.to_csv_row()
    assert row["lhs"] == "(7,7,7)" and row["passed"] == "true"
    assert "PASS" in r.to_human()


def test_reports_sorted_by_check_then_params():
    reports = suite.run_checks(29, ["sun_parity", "balanced", "parity_linkage"], (3, 1, 2))
    keys = [(r.check_id, r.params.get("m")) for r in reports]
    assert keys == sorted(keys, key=lambda k: (k[0], k[1] or 0))
