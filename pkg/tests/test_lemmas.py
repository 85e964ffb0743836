"""Floor-inequality sweeps, their exceptional points, and proof sub-facts."""

import pytest

from egfrac import lemmas
from egfrac._kernels_py import lp1_point, lp11_point, lp50_point, lp12_point
from egfrac.errors import DomainError


def test_lp1_sweep_clean():
    report = lemmas.verify_lp1(200)
    assert report.passed
    assert report.failures == []
    assert report.expected_exceptions == []
    assert report.points_checked > 10_000


def test_lp1_smallest_admissible_point():
    # q = 4, u = 2 gives (q+2)/u = 3; the single admissible (s, v) box point
    assert lp1_point(4, 2, 1, 1)
    assert lp1_point(4, 2, 1, 2)


def test_lp11_sweep_fails_only_at_known_pairs():
    report = lemmas.verify_lp11(200)
    assert report.passed
    assert report.failures == [(17, 2), (61, 8)]
    # observed verdicts at the exceptional pairs, including the exact tie
    observed = {(o["q"], o["u"], o["s"], o["v"]): o["equality"] for o in report.observations}
    assert observed == {(17, 2, 1, 2): True, (17, 2, 1, 3): False, (61, 8, 1, 3): False}


def test_lp11_points_hold_elsewhere_at_exceptional_q():
    # at q = 17, u = 2 the v = 1 point still holds
    assert lp11_point(17, 2, 1, 1)
    assert not lp11_point(17, 2, 1, 2)
    assert not lp11_point(17, 2, 1, 3)
    assert not lp11_point(61, 8, 1, 3)
    assert lp11_point(61, 8, 1, 2)


def test_lp50_sweep_and_spot_points():
    report = lemmas.verify_lp50(200)
    assert report.passed
    assert report.failures == [(17, 2), (61, 8)]
    assert all(not o["equality"] for o in report.observations)
    assert lp50_point(13, 4)
    assert not lp50_point(17, 2)


def test_lp12_report():
    report = lemmas.verify_lp12()
    assert report.passed
    assert report.failures == []
    obs = report.observations[0]
    assert obs["s"] == 155
    assert obs["equality"] is True
    assert obs["holds"] is False
    assert obs["floor_value"] == 7


def test_lp12_spot_points():
    # s = 1: floor(61*9/11) = 49 against 3912*9/705 - 1 (just below 49)
    assert (61 * 9) // 11 == 49
    assert lp12_point(1)
    assert not lp12_point(155)
    assert lp12_point(156)
    assert lp12_point(10**7)


def test_q_max_preconditions():
    with pytest.raises(DomainError):
        lemmas.verify_lp1(3)
    with pytest.raises(DomainError):
        lemmas.verify_lp11(4)
    with pytest.raises(DomainError):
        lemmas.tie_bridge_check(60)


def test_lp1_proof_survivors():
    assert lemmas.lp1_case_survivors(3) == [(7, 4, 7)]
    assert lemmas.lp1_case_survivors(5) == [(4, 1, 8), (8, 1, 40), (11, 1, 79), (11, 8, 12)]
    # every survivor violates the smallness condition the proof needs
    for k in (3, 5):
        for u, s, ell in lemmas.lp1_case_survivors(k):
            assert 2 * s * (ell + 1) > u * u
    with pytest.raises(DomainError):
        lemmas.lp1_case_survivors(4)


def test_lp11_proof_survivors():
    assert lemmas.lp11_case_survivors("2") == []
    assert lemmas.lp11_case_survivors("3.1") == [(2, 1, 10, 1)]
    assert lemmas.lp11_case_survivors("3.2") == []
    with pytest.raises(DomainError):
        lemmas.lp11_case_survivors("5")


def test_lp50_congruence_subfacts():
    assert lemmas.lp50_congruence_solvable_ks(1) == [8, 10]
    assert lemmas.lp50_congruence_solvable_ks(2) == [7]
    with pytest.raises(DomainError):
        lemmas.lp50_congruence_solvable_ks(3)


def test_tie_bridge_check():
    report = lemmas.tie_bridge_check(61)
    assert report.passed
    kinds = {(o["p"], o["q"]): o["kind"] for o in report.observations}
    assert kinds[(10, 17)] == "tie"
    assert kinds[(8, 61)] == "unique-optimum"


def test_reports_are_deterministic_and_parallel_safe():
    a = lemmas.verify_lp11(120)
    b = lemmas.verify_lp11(120)
    assert a == b
    c = lemmas.verify_lp11(120, jobs=2)
    assert a == c
    assert lemmas.verify_lp1(100, jobs=2) == lemmas.verify_lp1(100)
