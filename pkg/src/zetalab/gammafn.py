"""Complex gamma via the Lanczos approximation.

gamma_complex covers the whole plane minus the poles, using reflection
for Re(z) < 1/2. log_gamma covers the right half plane Re(z) > 0 and is
continuous along vertical lines, which matters because the principal
argument of gamma(1/4 + i t/2) wraps past +-pi around t ~ 11 and a naive
log(gamma(z)) would jump there.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError, PoleError

# Classic g = 7, 9-term Lanczos coefficients; relative error of the
# approximation is around 1e-13 on the right half plane, comfortably
# inside the 1e-10 promise made by gamma_complex.
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)
_LOG_SQRT_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _lanczos_series(z: complex) -> complex:
    acc = complex(_LANCZOS_C[0])
    for i in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[i] / (z - 1.0 + i)
    return acc


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def gamma_complex(z: complex) -> complex:
    """Gamma function on the complex plane.

    Raises PoleError at the poles z = 0, -1, -2, ... (exact hits only;
    nearby points evaluate to the correspondingly huge finite values).
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        # Reflection: gamma(z) gamma(1-z) = pi / sin(pi z).
        return math.pi / (cmath.sin(math.pi * z) * gamma_complex(1.0 - z))
    w = z + (_LANCZOS_G - 0.5)
    series = _lanczos_series(z)
    return _SQRT_TWO_PI * cmath.exp((z - 0.5) * cmath.log(w) - w) * series


def log_gamma(z: complex) -> complex:
    """log gamma(z) for Re(z) > 0, continuous in Im(z) along vertical lines.

    The imaginary part is the continuously-tracked argument, not the
    principal one: log_gamma(0.25 + 10j).imag is near 10.4 even though
    the principal argument of gamma there has already wrapped. Built
    from the log-form Lanczos formula for Re(z) >= 0.5, extended down to
    the axis with log_gamma(z) = log_gamma(z + 1) - log(z).
    """
    z = complex(z)
    if z.real <= 0.0:
        raise DomainError(f"log_gamma requires Re(z) > 0, got z = {z}")
    shift = complex(0.0)
    while z.real < 0.5:
        shift -= cmath.log(z)
        z += 1.0
    w = z + (_LANCZOS_G - 0.5)
    series = _lanczos_series(z)
    return (z - 0.5) * cmath.log(w) - w + _LOG_SQRT_TWO_PI + cmath.log(series) + shift
