"""Critical-line zero location through the Hardy function.

Z(t) = Re(e^(i theta(t)) zeta(1/2 + i t)) is real up to rounding and
changes sign at every simple zero on the critical line, so a coarse
sign-change scan plus bisection yields certified brackets. On top of the
candidates, verify_zero_equivalence demonstrates the factor identity's
consequence: inside the open strip the conversion factor never vanishes,
so zeros of the alternating sum and zeros of zeta are the same points,
while on the sigma = 1 edge the factor's own zeros break the equivalence.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError
from .gammafn import log_gamma
from .points import as_strip_point
from .series import eta_accelerated, factor_info, zeta_from_eta

# Method labels for ThetaValue.
THETA_ASYMPTOTIC = "asymptotic"
THETA_LOG_GAMMA = "log-gamma"

# The asymptotic expansion's next omitted term is ~31/(80640 t^5), which
# drops below 1e-8 near t = 8; switching at 10 keeps margin.
_THETA_SWITCH = 10.0

_LOG_PI = math.log(math.pi)

# Bisection refines brackets to this width.
_BRACKET_WIDTH = 1e-10

# Internal evaluation tolerance for zeta along the line; residuals are
# compared against 1e-6 so nine orders of headroom is plenty.
_LINE_TOL = 1e-11

# Verdict thresholds: below ZERO_TOL is a zero, above NONZERO_TOL is not,
# the band between is declared indeterminate.
ZERO_TOL = 1e-6
NONZERO_TOL = 1e-2

VERDICT_BOTH_ZERO = "both-zero"
VERDICT_NEITHER_ZERO = "neither-zero"
VERDICT_FACTOR_BOUNDARY = "factor-zero-boundary"
VERDICT_INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class ThetaValue:
    """The phase theta(t) with the route that produced it."""

    t: float
    theta: float
    method: str


@dataclass(frozen=True)
class ZeroCandidate:
    """A refined sign change of Z with its residual bookkeeping."""

    bracket: tuple
    refined_t: float
    z_residual: float
    eta_residual: float
    zeta_residual: float
    iterations: int


@dataclass(frozen=True)
class EquivalenceReport:
    """Moduli of eta, zeta, and the conversion factor at one point.

    consistency_gap = | |eta| - |factor| * |zeta| | exhibits the factor
    identity numerically: it is tiny in both directions regardless of
    which modulus is small.
    """

    s: complex
    eta_abs: float
    zeta_abs: float
    factor_abs: float
    consistency_gap: float
    verdict: str


@dataclass(frozen=True)
class SymmetryReport:
    """Residuals at a zero candidate and at its conjugate point.

    On the critical line the reflection s -> 1-s lands on the conjugate,
    so this single check covers both of the strip's symmetries.
    """

    refined_t: float
    zeta_residual: float
    conjugate_residual: float
    reflection_is_conjugate: bool


def theta_rs(t: float) -> ThetaValue:
    """Riemann-Siegel phase, odd in t.

    For |t| >= 10 the standard asymptotic expansion; below that the
    log-gamma route Im(log gamma(1/4 + i t/2)) - t ln(pi)/2, which also
    serves as the cross-check oracle for the asymptotic branch.
    """
    if t == 0.0:
        raise DomainError("theta is evaluated away from t = 0")
    at = abs(t)
    if at >= _THETA_SWITCH:
        value = (
            0.5 * at * math.log(at / (2.0 * math.pi))
            - 0.5 * at
            - 0.125 * math.pi
            + 1.0 / (48.0 * at)
            + 7.0 / (5760.0 * at**3)
        )
        method = THETA_ASYMPTOTIC
    else:
        value = log_gamma(complex(0.25, 0.5 * at)).imag - 0.5 * at * _LOG_PI
        method = THETA_LOG_GAMMA
    return ThetaValue(t=t, theta=value if t > 0 else -value, method=method)


def theta_log_gamma(t: float) -> ThetaValue:
    """The log-gamma route at any t != 0, exposed as the oracle branch."""
    if t == 0.0:
        raise DomainError("theta is evaluated away from t = 0")
    at = abs(t)
    value = log_gamma(complex(0.25, 0.5 * at)).imag - 0.5 * at * _LOG_PI
    return ThetaValue(t=t, theta=value if t > 0 else -value, method=THETA_LOG_GAMMA)


def hardy_z(t: float) -> float:
    """Z(t) = e^(i theta) zeta(1/2 + i t), checked real and made real.

    The imaginary part of the rotated product must sit below 1e-8; it is
    then discarded. Even in t by conjugate symmetry.
    """
    if t == 0.0:
        raise DomainError("hardy_z is evaluated away from t = 0")
    theta = theta_rs(t).theta
    z = cmath.exp(complex(0.0, theta)) * zeta_from_eta(complex(0.5, t), _LINE_TOL).value
    if abs(z.imag) >= 1e-8:
        raise ArithmeticError(
            f"rotated product at t={t} has imaginary part {z.imag:.3e}; "
            f"phase and evaluation disagree beyond tolerance"
        )
    return z.real


def _bisect_sign_change(t_lo: float, t_hi: float, z_lo: float):
    """Pure bisection until the bracket is narrower than _BRACKET_WIDTH."""
    a, b = t_lo, t_hi
    za = z_lo
    iterations = 0
    while (b - a) >= _BRACKET_WIDTH:
        mid = 0.5 * (a + b)
        zm = hardy_z(mid)
        iterations += 1
        if (zm < 0.0) == (za < 0.0):
            a, za = mid, zm
        else:
            b = mid
    return 0.5 * (a + b), iterations


def scan_zeros(t_lo: float, t_hi: float, step: float = 0.1):
    """Bracket and refine every sign change of Z on the step grid.

    Candidates come back sorted by refined_t. A step too coarse to
    separate neighbouring zeros silently merges or misses them; the
    default 0.1 is an order of magnitude below the zero spacing for
    t <= 50. Deterministic: the grid, the bisection, and the residual
    evaluations are all fixed functions of the arguments.
    """
    if not 0.0 < t_lo < t_hi:
        raise ValueError(f"need 0 < t_lo < t_hi, got [{t_lo}, {t_hi}]")
    if step <= 0.0:
        raise ValueError(f"step must be positive, got {step}")
    grid = []
    i = 0
    while True:
        point = t_lo + i * step
        if point >= t_hi:
            grid.append(t_hi)
            break
        grid.append(point)
        i += 1
    values = [hardy_z(p) for p in grid]
    candidates = []
    for (a, b, za, zb) in zip(grid, grid[1:], values, values[1:]):
        if (za < 0.0) != (zb < 0.0):
            refined, iterations = _bisect_sign_change(a, b, za)
            s = complex(0.5, refined)
            eta_res = abs(eta_accelerated(s, _LINE_TOL).value)
            zeta_res = abs(zeta_from_eta(s, _LINE_TOL).value)
            candidates.append(
                ZeroCandidate(
                    bracket=(a, b),
                    refined_t=refined,
                    z_residual=abs(hardy_z(refined)),
                    eta_residual=eta_res,
                    zeta_residual=zeta_res,
                    iterations=iterations,
                )
            )
    return candidates


def verify_zero_equivalence(s) -> EquivalenceReport:
    """Exhibit |eta| = |factor| * |zeta| at one point and classify it.

    Inside the open strip the factor cannot vanish, so small |eta| and
    small |zeta| imply each other; on the sigma = 1 edge the factor's
    zeros produce eta zeros with no zeta zero behind them, reported as
    factor-zero-boundary. Between the zero and nonzero thresholds the
    verdict is indeterminate by design.
    """
    p = as_strip_point(s)
    if not (p.in_open_strip or p.sigma == 1.0):
        raise DomainError(
            f"equivalence check covers the open strip and the sigma = 1 "
            f"edge, got sigma={p.sigma}"
        )
    info = factor_info(p)
    eta_abs = abs(eta_accelerated(p, _LINE_TOL).value)
    zeta_abs = abs(zeta_from_eta(p, _LINE_TOL).value)
    fac_abs = abs(info.factor)
    gap = abs(eta_abs - fac_abs * zeta_abs)
    if fac_abs < ZERO_TOL:
        verdict = VERDICT_FACTOR_BOUNDARY
    elif eta_abs < ZERO_TOL and zeta_abs < ZERO_TOL:
        verdict = VERDICT_BOTH_ZERO
    elif eta_abs > NONZERO_TOL and zeta_abs > NONZERO_TOL:
        verdict = VERDICT_NEITHER_ZERO
    else:
        verdict = VERDICT_INDETERMINATE
    return EquivalenceReport(
        s=p.as_complex(),
        eta_abs=eta_abs,
        zeta_abs=zeta_abs,
        factor_abs=fac_abs,
        consistency_gap=gap,
        verdict=verdict,
    )


def check_symmetry(candidate: ZeroCandidate) -> SymmetryReport:
    """Evaluate the conjugate point of a candidate zero.

    For s = 1/2 + i t the reflection 1 - s equals the conjugate, so the
    conjugate residual simultaneously witnesses symmetry about the real
    axis and about the critical line.
    """
    t = candidate.refined_t
    conj_res = abs(zeta_from_eta(complex(0.5, -t), _LINE_TOL).value)
    return SymmetryReport(
        refined_t=t,
        zeta_residual=candidate.zeta_residual,
        conjugate_residual=conj_res,
        reflection_is_conjugate=True,
    )
