"""Quantitative diagnostics of the truncated alternating sum.

The spine of this module is one algebraic identity: with

    P_N = sum_{k<=N} k^(-2 sigma)                       (power sum)
    T_N = sum_{k<k'<=N} (-1)^(k+k') cos(t ln(k/k')) / (k k')^sigma

the combined sum S_N = P_N + 2 T_N equals |eta_N(s)|^2 exactly, because
expanding the squared modulus of the partial sum produces the diagonal
terms P_N and the cross terms 2 T_N. The brute-force pair sum and the
O(N) route through |eta_N|^2 check each other; everything else here
(convergence profiles, the off-line constant, the continuity sweep) is
bookkeeping around the same quantities.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from . import backends
from .errors import CostGuardError, DomainError
from .points import StripPoint, as_strip_point
from .series import PartialSumState, eta_partial_trajectory, zeta_from_eta

# Above this N the quadratic pair sum would exceed desk scale
# (2e8 pair operations); callers wanting larger N use cross_term_fast.
BRUTE_PAIR_GUARD = 20000

# Thresholds for reading a diagnostic value as zero / nonzero; between
# them is a declared indeterminate band, because a numeric artifact
# cannot reason with exact zeros.
ZERO_TOL = 1e-6
NONZERO_TOL = 1e-2


@dataclass(frozen=True)
class DiagnosticRecord:
    """One row of the partial-sum diagnostics at a fixed s and N.

    combined_sum is stored as power_sum + 2*cross_term evaluated in that
    exact expression, so the first invariant of the type is true by
    construction; identity_residual measures the distance to the
    independently accumulated |eta_N|^2.
    """

    n_terms: int
    power_sum: float
    cross_term: float
    combined_sum: float
    eta_abs_sq: float
    identity_residual: float
    from_brute: bool

    @property
    def non_negative(self) -> bool:
        return self.combined_sum >= 0.0 or self.from_brute


@dataclass(frozen=True)
class ConvergenceProfile:
    """Smallest window-stable N per epsilon, mirroring the limit definition.

    entries holds (epsilon, n_of_epsilon, window_checked) sorted by
    decreasing epsilon; n_of_epsilon is None when the search budget was
    exhausted without finding a stable N, and window_checked records the
    [N, ceil(check_factor*N)] range that was actually verified.
    """

    s: StripPoint
    check_factor: float
    budget: int
    entries: tuple


@dataclass(frozen=True)
class CAlphaResult:
    """The off-line constant C(alpha) = lim_N P_N = zeta(2 sigma)."""

    sigma: float
    value: float
    exceeds_one: bool


def _warn_if_t_zero(t: float) -> None:
    if t == 0.0:
        warnings.warn(
            "t = 0 lies outside the regime of interest (the rotation angle "
            "vanishes); values are exact but every cosine degenerates to 1",
            UserWarning,
            stacklevel=3,
        )


def power_sum(sigma: float, n: int) -> float:
    """Compensated P_N = sum_{k<=N} k^(-2 sigma); strictly increasing in N."""
    if sigma <= 0.0:
        raise DomainError(f"power_sum needs sigma > 0, got {sigma}")
    if n < 1:
        raise ValueError(f"power_sum needs N >= 1, got {n}")
    total, comp = backends.power_advance(2.0 * sigma, 0, n, 0.0, 0.0)
    return total + comp


def cross_term_brute(sigma: float, t: float, n: int) -> float:
    """The pair sum over 1 <= k < k' <= N, term by term.

    Quadratic cost; this is the independent oracle for cross_term_fast,
    so it never looks at eta. Pair order is deterministic: outer k',
    inner k, compensated accumulation in both loops.
    """
    if n < 1:
        raise ValueError(f"cross_term_brute needs N >= 1, got {n}")
    if n > BRUTE_PAIR_GUARD:
        raise CostGuardError(
            f"N={n} exceeds the brute-force guard of {BRUTE_PAIR_GUARD} "
            f"({n * (n - 1) // 2:.2e} pairs); use cross_term_fast for large N"
        )
    _warn_if_t_zero(t)
    return float(backends.cross_term_pairs(float(sigma), float(t), int(n)))


def cross_term_fast(sigma: float, t: float, n: int) -> float:
    """T_N via the identity T_N = (|eta_N(s)|^2 - P_N) / 2, O(N) cost."""
    if n < 1:
        raise ValueError(f"cross_term_fast needs N >= 1, got {n}")
    _warn_if_t_zero(t)
    state = PartialSumState.initial(complex(sigma, t)).advanced_to(n)
    return 0.5 * (abs(state.value) ** 2 - state.power_sum)


def _record_from_state(state: PartialSumState, brute: str) -> DiagnosticRecord:
    """Build one DiagnosticRecord from an advanced state.

    brute is 'auto', 'always', or 'never'. The brute path supplies
    cross_term when allowed and affordable; otherwise the fast route
    fills in and identity_residual only measures internal rounding.
    """
    p_n = state.power_sum
    eta_abs_sq = abs(state.value) ** 2
    if brute == "always" and state.n > BRUTE_PAIR_GUARD:
        raise CostGuardError(
            f"N={state.n} exceeds the brute-force guard of {BRUTE_PAIR_GUARD}"
        )
    use_brute = brute == "always" or (brute == "auto" and state.n <= BRUTE_PAIR_GUARD)
    if use_brute:
        t_n = float(backends.cross_term_pairs(state.sigma, state.t, state.n))
        from_brute = True
    else:
        t_n = 0.5 * (eta_abs_sq - p_n)
        from_brute = False
    s_n = p_n + 2.0 * t_n
    return DiagnosticRecord(
        n_terms=state.n,
        power_sum=p_n,
        cross_term=t_n,
        combined_sum=s_n,
        eta_abs_sq=eta_abs_sq,
        identity_residual=abs(s_n - eta_abs_sq),
        from_brute=from_brute,
    )


def diagnostic_series(s, n_list, brute: str = "auto"):
    """DiagnosticRecords at each N in n_list, one resumable state pass.

    Requires s in the open strip. brute='auto' takes the pair-sum path
    whenever N is under the guard, 'always' demands it (raising
    CostGuardError above the guard), 'never' sticks to the fast route.
    """
    if brute not in ("auto", "always", "never"):
        raise ValueError(f"brute must be 'auto', 'always' or 'never', got {brute!r}")
    p = as_strip_point(s)
    if not p.in_open_strip:
        raise DomainError(
            f"diagnostic_series runs inside the open strip 0 < sigma < 1, "
            f"got sigma={p.sigma}"
        )
    ns = list(n_list)
    if not ns:
        raise ValueError("n_list must be non-empty")
    if any(n < 1 for n in ns):
        raise ValueError(f"n_list entries must be >= 1, got {ns}")
    if sorted(ns) != ns or len(set(ns)) != len(ns):
        raise ValueError(f"n_list must be strictly increasing, got {ns}")
    _warn_if_t_zero(p.t)
    records = []
    state = PartialSumState.initial(p)
    for n in ns:
        state = state.advanced_to(n)
        records.append(_record_from_state(state, brute))
    return records


def convergence_profile(s, epsilons, check_factor: float = 2.0, budget: int = 100000):
    """Smallest N per epsilon with the whole window [N, cf*N] under epsilon.

    Implements the limit definition with a finite verification window:
    N(eps) is the least N in [1, budget] such that |Re eta_M| < eps and
    |Im eta_M| < eps for every M in [N, ceil(check_factor*N)]. Entries
    whose search exhausts the budget report n_of_epsilon = None.
    """
    p = as_strip_point(s)
    if not p.in_open_strip:
        raise DomainError(
            f"convergence_profile runs inside the open strip, got sigma={p.sigma}"
        )
    eps_list = [float(e) for e in epsilons]
    if not eps_list:
        raise ValueError("epsilons must be non-empty")
    if any(e <= 0.0 for e in eps_list):
        raise ValueError(f"epsilons must be positive, got {eps_list}")
    if check_factor < 1.0:
        raise ValueError(f"check_factor must be >= 1, got {check_factor}")
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    horizon = int(math.ceil(check_factor * budget))
    re, im = eta_partial_trajectory(p, horizon)

    entries = []
    for eps in sorted(eps_list, reverse=True):
        # Last 0-based index where the bound fails; -1 when it never does.
        last_bad = -1
        for i in range(horizon - 1, -1, -1):
            if abs(re[i]) >= eps or abs(im[i]) >= eps:
                last_bad = i
                break
        # next_bad[i]: smallest violating index >= i, horizon+1 when none.
        # Violations cannot occur past last_bad, so the table stops there.
        next_bad = [horizon + 1] * (last_bad + 2)
        for i in range(last_bad, -1, -1):
            bad = abs(re[i]) >= eps or abs(im[i]) >= eps
            next_bad[i] = i if bad else next_bad[i + 1]
        found = None
        for n in range(1, budget + 1):
            hi = int(math.ceil(check_factor * n))
            if hi > horizon:
                break  # window no longer verifiable inside the trajectory
            idx = n - 1
            nb = next_bad[idx] if idx <= last_bad else horizon + 1
            if nb >= hi:  # indices idx .. hi-1 (M in [n, hi]) all pass
                found = (n, hi)
                break
        if found is None:
            entries.append((eps, None, (1, horizon)))
        else:
            entries.append((eps, found[0], (found[0], found[1])))
    return ConvergenceProfile(
        s=p, check_factor=check_factor, budget=budget, entries=tuple(entries)
    )


def c_alpha(sigma: float) -> CAlphaResult:
    """The off-line constant C(alpha) = zeta(2 sigma) for 1/2 < sigma < 1.

    This is the limit of the power sum P_N; it exceeds 1 throughout the
    open interval, which is the quantitative content of the off-line
    case. Evaluated through zeta_from_eta at the real argument 2 sigma.
    """
    if not 0.5 < sigma < 1.0:
        raise DomainError(f"c_alpha needs sigma strictly in (1/2, 1), got {sigma}")
    value = zeta_from_eta(complex(2.0 * sigma, 0.0)).value.real
    return CAlphaResult(sigma=sigma, value=value, exceeds_one=value > 1.0)


def cross_term_sweep(u_grid, t: float, n: int):
    """F_N(u) = cross_term_fast(u, t, N) over a grid of u in (0, 1).

    Returns (u, F) pairs ordered by u. The exponent u plays the role of
    sigma; grid values touching the interval ends are rejected because
    the endpoint behavior is not part of the sweep's claim.
    """
    us = [float(u) for u in u_grid]
    if not us:
        raise ValueError("u_grid must be non-empty")
    if any(not 0.0 < u < 1.0 for u in us):
        raise ValueError(f"u_grid values must lie strictly inside (0, 1), got {us}")
    if n < 1:
        raise ValueError(f"sweep needs N >= 1, got {n}")
    _warn_if_t_zero(t)
    out = []
    for u in sorted(us):
        state = PartialSumState.initial(complex(u, t)).advanced_to(n)
        out.append((u, 0.5 * (abs(state.value) ** 2 - state.power_sum)))
    return out
