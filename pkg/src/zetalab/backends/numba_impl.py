"""Numba-compiled kernels.

Same five entry points as zetalab.backends.numpy_impl, compiled with
@njit. No fastmath: the Neumaier compensation steps rely on strict IEEE
evaluation order, and reassociation would silently destroy them. Importing
this module raises ImportError when numba is unavailable; the dispatcher
in zetalab.backends falls back to the NumPy implementations.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit


@njit(cache=True)
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
    for n in range(n_from + 1, n_to + 1):
        k = float(n)
        w = k ** (-sigma)
        phase = t * math.log(k)
        sign = 1.0 if (n & 1) == 1 else -1.0
        sw = sign * w

        x = sw * math.cos(phase)
        s = cos_sum + x
        if abs(cos_sum) >= abs(x):
            cos_comp += (cos_sum - s) + x
        else:
            cos_comp += (x - s) + cos_sum
        cos_sum = s

        y = sw * math.sin(phase)
        s = sin_sum + y
        if abs(sin_sum) >= abs(y):
            sin_comp += (sin_sum - s) + y
        else:
            sin_comp += (y - s) + sin_sum
        sin_sum = s

        z = w * w
        s = pow_sum + z
        if abs(pow_sum) >= abs(z):
            pow_comp += (pow_sum - s) + z
        else:
            pow_comp += (z - s) + pow_sum
        pow_sum = s
    return cos_sum, cos_comp, sin_sum, sin_comp, pow_sum, pow_comp


@njit(cache=True)
def eta_prefix(sigma: float, t: float, n_max: int):
    re = np.empty(n_max, dtype=np.float64)
    im = np.empty(n_max, dtype=np.float64)
    cos_sum = 0.0
    cos_comp = 0.0
    sin_sum = 0.0
    sin_comp = 0.0
    for n in range(1, n_max + 1):
        k = float(n)
        w = k ** (-sigma)
        phase = t * math.log(k)
        sign = 1.0 if (n & 1) == 1 else -1.0
        sw = sign * w

        x = sw * math.cos(phase)
        s = cos_sum + x
        if abs(cos_sum) >= abs(x):
            cos_comp += (cos_sum - s) + x
        else:
            cos_comp += (x - s) + cos_sum
        cos_sum = s

        y = sw * math.sin(phase)
        s = sin_sum + y
        if abs(sin_sum) >= abs(y):
            sin_comp += (sin_sum - s) + y
        else:
            sin_comp += (y - s) + sin_sum
        sin_sum = s

        re[n - 1] = cos_sum + cos_comp
        im[n - 1] = -(sin_sum + sin_comp)
    return re, im


@njit(cache=True)
def power_advance(expo: float, n_from: int, n_to: int, total: float, comp: float):
    for n in range(n_from + 1, n_to + 1):
        x = float(n) ** (-expo)
        s = total + x
        if abs(total) >= abs(x):
            comp += (total - s) + x
        else:
            comp += (x - s) + total
        total = s
    return total, comp


@njit(cache=True)
def cross_term_pairs(sigma: float, t: float, n: int) -> float:
    if n < 2:
        return 0.0
    lk = np.empty(n, dtype=np.float64)
    sw = np.empty(n, dtype=np.float64)
    for i in range(n):
        k = float(i + 1)
        lk[i] = math.log(k)
        sw[i] = (1.0 if (i & 1) == 0 else -1.0) * k ** (-sigma)
    total = 0.0
    comp = 0.0
    for j in range(1, n):
        lj = lk[j]
        row = 0.0
        row_comp = 0.0
        for i in range(j):
            x = sw[i] * math.cos(t * (lk[i] - lj))
            s = row + x
            if abs(row) >= abs(x):
                row_comp += (row - s) + x
            else:
                row_comp += (x - s) + row
            row = s
        x = (row + row_comp) * sw[j]
        s = total + x
        if abs(total) >= abs(x):
            comp += (total - s) + x
        else:
            comp += (x - s) + total
        total = s
    return total + comp


@njit(cache=True)
def cvz_eta(sigma: float, t: float, order: int):
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
