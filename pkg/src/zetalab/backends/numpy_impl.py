"""Pure NumPy / Python kernels.

Reference implementations of the hot loops, selected by setting
ZETALAB_BACKEND=numpy or automatically when numba cannot be imported.
Semantics match zetalab.backends.numba_impl: every resumable accumulator
is a sequential Neumaier (improved Kahan) sum over terms taken in index
order, so advancing a state in pieces reproduces a single fresh pass bit
for bit within this backend. Term values are vectorised per chunk; the
chunk boundary never changes a term, only where the Python loop pauses.
"""

from __future__ import annotations

import math

import numpy as np

# Chunk size for vectorised term generation; bounds peak memory at a few
# hundred megabytes even for N = 10**7.
_CHUNK = 1 << 20


def _neumaier(total: float, comp: float, x: float) -> tuple[float, float]:
    """One compensated-summation step; returns the updated (sum, comp)."""
    t = total + x
    if abs(total) >= abs(x):
        comp += (total - t) + x
    else:
        comp += (x - t) + total
    return t, comp


def _term_block(sigma: float, t: float, lo: int, hi: int):
    """Term arrays for k in (lo, hi]: signed cos/sin components and k^-2sigma.

    cos block: (-1)^(k-1) cos(t ln k) k^-sigma
    sin block: (-1)^(k-1) sin(t ln k) k^-sigma
    pow block: k^-2sigma
    """
    k = np.arange(lo + 1, hi + 1, dtype=np.float64)
    lk = np.log(k)
    w = k ** (-sigma)
    sign = np.where((np.arange(lo + 1, hi + 1) & 1) == 1, 1.0, -1.0)
    sw = sign * w
    phase = t * lk
    return sw * np.cos(phase), sw * np.sin(phase), w * w


def eta_advance(
    sigma: float,
    t: float,
    n_from: int,
    n_to: int,
    cos_sum: float,
    cos_comp: float,
    sin_sum: float,
    sin_comp: float,
    pow_sum: float,
    pow_comp: float,
):
    """Advance the three running sums over terms k = n_from+1 .. n_to."""
    pos = n_from
    while pos < n_to:
        stop = min(pos + _CHUNK, n_to)
        cblk, sblk, pblk = _term_block(sigma, t, pos, stop)
        for x, y, z in zip(cblk.tolist(), sblk.tolist(), pblk.tolist()):
            cos_sum, cos_comp = _neumaier(cos_sum, cos_comp, x)
            sin_sum, sin_comp = _neumaier(sin_sum, sin_comp, y)
            pow_sum, pow_comp = _neumaier(pow_sum, pow_comp, z)
        pos = stop
    return cos_sum, cos_comp, sin_sum, sin_comp, pow_sum, pow_comp


def eta_prefix(sigma: float, t: float, n_max: int):
    """Partial-sum trajectory: arrays re, im with re[m-1] + i*im[m-1] = eta_m."""
    re = np.empty(n_max, dtype=np.float64)
    im = np.empty(n_max, dtype=np.float64)
    cos_sum = cos_comp = sin_sum = sin_comp = 0.0
    pos = 0
    idx = 0
    while pos < n_max:
        stop = min(pos + _CHUNK, n_max)
        cblk, sblk, _ = _term_block(sigma, t, pos, stop)
        for x, y in zip(cblk.tolist(), sblk.tolist()):
            cos_sum, cos_comp = _neumaier(cos_sum, cos_comp, x)
            sin_sum, sin_comp = _neumaier(sin_sum, sin_comp, y)
            re[idx] = cos_sum + cos_comp
            im[idx] = -(sin_sum + sin_comp)
            idx += 1
        pos = stop
    return re, im


def power_advance(expo: float, n_from: int, n_to: int, total: float, comp: float):
    """Extend sum of k^-expo over k = n_from+1 .. n_to.

    Blocks are reduced with numpy's pairwise sum and combined with a
    Neumaier step. Deterministic for given arguments, but resuming from
    a checkpoint regroups the blocks, so piecewise calls agree with a
    single pass only to compensated accuracy, not bit for bit. The state
    carried by eta_advance is the bitwise-resumable path; this kernel is
    only ever driven from n_from = 0 by the package itself.
    """
    pos = n_from
    while pos < n_to:
        stop = min(pos + _CHUNK, n_to)
        k = np.arange(pos + 1, stop + 1, dtype=np.float64)
        block = float(np.sum(k ** (-expo)))
        total, comp = _neumaier(total, comp, block)
        pos = stop
    return total, comp


def cross_term_pairs(sigma: float, t: float, n: int) -> float:
    """Brute-force pair sum over 1 <= k < k' <= n.

    sum of (-1)^(k+k') cos(t ln(k/k')) k^-sigma k'^-sigma, accumulated
    row by row in k' with a compensated combine. Quadratic cost; callers
    enforce the size guard.
    """
    if n < 2:
        return 0.0
    idx = np.arange(1, n + 1)
    k = idx.astype(np.float64)
    lk = np.log(k)
    sw = np.where((idx & 1) == 1, 1.0, -1.0) * k ** (-sigma)
    total = 0.0
    comp = 0.0
    for j in range(1, n):
        row = float(np.dot(sw[:j], np.cos(t * (lk[:j] - lk[j])))) * sw[j]
        total, comp = _neumaier(total, comp, row)
    return total + comp


def cvz_eta(sigma: float, t: float, order: int):
    """Chebyshev-weighted alternating-series acceleration at a fixed order.

    Returns (re, im) for sum_{k>=1} (-1)^(k-1) k^-s with s = sigma + i t,
    using the rational Chebyshev weights of Cohen, Rodriguez Villegas and
    Zagier; the alternating sign lives in the weight recurrence, so the
    terms fed in are the positive-sign values k^-s themselves.
    """
    d = (3.0 + 2.0 * math.sqrt(2.0)) ** order
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    s_re = 0.0
    s_im = 0.0
    for k in range(order):
        c = b - c
        kk = k + 1.0
        w = kk ** (-sigma)
        phase = t * math.log(kk)
        s_re += c * (w * math.cos(phase))
        s_im += c * (-w * math.sin(phase))
        b *= (k + order) * (k - order) / ((k + 0.5) * (k + 1.0))
    return s_re / d, s_im / d
