import math

import pytest

import oracles
from zetalab import (
    DomainError,
    check_symmetry,
    hardy_z,
    scan_zeros,
    verify_zero_equivalence,
    zeta_from_eta,
)
from zetalab.series import LN2, TWO_PI
from zetalab.zeros import (
    THETA_ASYMPTOTIC,
    THETA_LOG_GAMMA,
    VERDICT_BOTH_ZERO,
    VERDICT_FACTOR_BOUNDARY,
    VERDICT_INDETERMINATE,
    VERDICT_NEITHER_ZERO,
    theta_log_gamma,
    theta_rs,
)

# Ordinates frozen from the dense-grid scan oracle (step 1e-3, bisected).
ORACLE_ZEROS = (14.134725141734702, 21.022039638771552, 25.010857580145696)


# --- the phase --------------------------------------------------------------


def test_theta_route_switch_and_labels():
    assert theta_rs(14.134725).method == THETA_ASYMPTOTIC
    assert theta_rs(10.0).method == THETA_ASYMPTOTIC
    assert theta_rs(5.0).method == THETA_LOG_GAMMA
    assert theta_log_gamma(25.0).method == THETA_LOG_GAMMA


def test_theta_frozen_values():
    assert abs(theta_rs(14.134725).theta - (-1.72867030411728)) <= 1e-8
    assert abs(theta_rs(5.0).theta - (-3.459620375363464)) <= 1e-10


def test_theta_two_routes_agree_above_ten():
    for t in (10.0, 14.134725, 25.0, 77.7, 100.0):
        a = theta_rs(t).theta
        b = theta_log_gamma(t).theta
        assert abs(a - b) < 1e-8, t


def test_theta_matches_stirling_oracle_everywhere():
    for t in (0.5, 1.0, 5.0, 9.99, 10.0, 14.134725, 49.9, 100.0):
        assert abs(theta_rs(t).theta - oracles.theta_phase(t)) <= 1e-8, t


def test_theta_is_odd_exactly():
    for t in (0.7, 5.0, 14.134725, 60.0):
        assert theta_rs(-t).theta == -theta_rs(t).theta
        assert theta_log_gamma(-t).theta == -theta_log_gamma(t).theta


def test_theta_rejects_zero():
    with pytest.raises(DomainError):
        theta_rs(0.0)
    with pytest.raises(DomainError):
        theta_log_gamma(0.0)


# --- the Hardy function ------------------------------------------------------


def test_hardy_z_is_even():
    for t in (3.0, 14.2, 25.7, 49.0):
        a = hardy_z(t)
        b = hardy_z(-t)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a)), t


def test_hardy_z_modulus_equals_zeta_modulus():
    for t in (3.0, 10.1, 14.2, 30.0, 49.7):
        z = abs(hardy_z(t))
        zeta = abs(zeta_from_eta(complex(0.5, t), 1e-11).value)
        assert abs(z - zeta) <= 1e-11 * max(1.0, zeta), t


def test_hardy_z_matches_oracle():
    for t in (10.1, 14.2, 21.0, 25.0, 29.7):
        assert abs(hardy_z(t) - oracles.hardy_z(t)) <= 1e-10, t


def test_hardy_z_rejects_zero():
    with pytest.raises(DomainError):
        hardy_z(0.0)


# --- scanning and refinement -------------------------------------------------


def test_scan_finds_the_first_three_zeros():
    cands = scan_zeros(10.0, 30.0, 0.1)
    assert len(cands) == 3
    for cand, want in zip(cands, ORACLE_ZEROS):
        assert abs(cand.refined_t - want) <= 1e-9
        lo, hi = cand.bracket
        assert lo < cand.refined_t < hi
        assert (hardy_z(lo) < 0.0) != (hardy_z(hi) < 0.0)
        assert cand.z_residual < 1e-9
        assert cand.eta_residual < 1e-9
        assert cand.zeta_residual < 1e-9
        assert cand.iterations > 20


def test_scan_matches_dense_grid_oracle_windows():
    # rerun the dense oracle live on narrow windows around each zero
    for window, want in (
        ((14.0, 14.3), ORACLE_ZEROS[0]),
        ((20.9, 21.1), ORACLE_ZEROS[1]),
        ((24.9, 25.2), ORACLE_ZEROS[2]),
    ):
        dense = oracles.dense_zero_scan(window[0], window[1])
        assert len(dense) == 1
        assert abs(dense[0] - want) <= 1e-10
        cands = scan_zeros(window[0], window[1], 0.05)
        assert len(cands) == 1
        assert abs(cands[0].refined_t - dense[0]) <= 1e-9


def test_scan_count_is_step_stable():
    counts = {step: len(scan_zeros(10.0, 50.0, step)) for step in (0.1, 0.05, 0.025)}
    assert counts[0.1] == counts[0.05] == counts[0.025] == 10


def test_scan_empty_range_below_first_zero():
    assert scan_zeros(1.0, 10.0, 0.1) == []


def test_scan_residual_consistency_chain():
    for cand in scan_zeros(10.0, 30.0, 0.1):
        s = complex(0.5, cand.refined_t)
        fac = abs(1.0 - 2.0 ** (1.0 - s))
        assert cand.eta_residual <= fac * cand.zeta_residual * (1.0 + 1e-6)
        assert cand.eta_residual >= fac * cand.zeta_residual * (1.0 - 1e-6)


def test_scan_is_deterministic_bit_for_bit():
    first = scan_zeros(14.0, 14.3, 0.05)
    second = scan_zeros(14.0, 14.3, 0.05)
    assert first == second


def test_scan_validation():
    with pytest.raises(ValueError):
        scan_zeros(30.0, 10.0, 0.1)
    with pytest.raises(ValueError):
        scan_zeros(-5.0, 10.0, 0.1)
    with pytest.raises(ValueError):
        scan_zeros(10.0, 30.0, 0.0)


# --- equivalence and symmetry -------------------------------------------------


def test_equivalence_at_a_zero():
    rep = verify_zero_equivalence(complex(0.5, ORACLE_ZEROS[0]))
    assert rep.verdict == VERDICT_BOTH_ZERO
    assert rep.eta_abs < 1e-6
    assert rep.zeta_abs < 1e-6
    assert rep.consistency_gap <= 1e-6 * max(rep.eta_abs, 1e-12)


def test_equivalence_away_from_zeros():
    rep = verify_zero_equivalence(complex(0.5, 1.0))
    assert rep.verdict == VERDICT_NEITHER_ZERO
    assert rep.eta_abs > 1e-2
    assert rep.zeta_abs > 1e-2


def test_equivalence_factor_boundary_case():
    s = complex(1.0, TWO_PI / LN2)
    rep = verify_zero_equivalence(s)
    assert rep.verdict == VERDICT_FACTOR_BOUNDARY
    assert rep.factor_abs < 1e-6
    assert rep.eta_abs < 1e-6
    assert rep.zeta_abs > 0.1


def test_equivalence_sigma_one_away_from_factor_zeros():
    rep = verify_zero_equivalence(complex(1.0, 5.0))
    assert rep.verdict == VERDICT_NEITHER_ZERO


def test_equivalence_indeterminate_band():
    # slightly off a zero: residuals land between the two thresholds
    rep = verify_zero_equivalence(complex(0.5, ORACLE_ZEROS[0] + 3e-4))
    assert rep.verdict == VERDICT_INDETERMINATE


def test_equivalence_rejects_exterior():
    with pytest.raises(DomainError):
        verify_zero_equivalence(complex(1.5, 3.0))
    with pytest.raises(DomainError):
        verify_zero_equivalence(complex(-0.2, 3.0))


def test_symmetry_at_found_zeros():
    for cand in scan_zeros(10.0, 30.0, 0.1):
        rep = check_symmetry(cand)
        assert rep.refined_t == cand.refined_t
        assert rep.zeta_residual == cand.zeta_residual
        assert rep.conjugate_residual < 1e-6
        assert rep.reflection_is_conjugate
